#pragma once

#include "translab/ball.hpp"
#include "translab/poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace translab {

// mant * base^exp, compared exactly without expanding huge powers when the
// bit lengths already decide the order
struct BaseRational {
    unsigned base = 2;
    Int mant;
    long exp = 0;
    static BaseRational power(unsigned base, long e) { return {base, Int(1), e}; }
};
int compare(const BaseRational& a, const BaseRational& b);  // -1, 0, 1; same base required
Rat to_rat(const BaseRational& x);                           // only for moderate exponents

// digit m_j for j >= 1, either eventually periodic or generated with a
// certificate that every window of `nonzero_gap` consecutive indices has a nonzero digit
struct DigitRule {
    std::vector<unsigned> preperiod, period;
    std::function<unsigned(unsigned long)> generator;
    unsigned long nonzero_gap = 0;

    static DigitRule periodic(std::vector<unsigned> pre, std::vector<unsigned> per);
    static DigitRule constant(unsigned d) { return periodic({}, {d}); }
    static DigitRule generated(std::function<unsigned(unsigned long)> g, unsigned long gap);
    unsigned digit(unsigned long j) const;
    std::string describe() const;
};

struct LiouvilleCheck {
    unsigned k = 0;
    unsigned long witness_index = 0;  // first j > k with m_j != 0
    bool positive = false;            // x - p_k/q_k >= m_j base^{-j!} > 0
    bool below = false;               // x - p_k/q_k < base^{1-(k+1)!} <= q_k^{-k}
    bool ok() const { return positive && below; }
};

class LiouvilleNumber {
public:
    LiouvilleNumber(unsigned base, DigitRule rule);
    unsigned base() const { return base_; }
    const DigitRule& rule() const { return rule_; }
    unsigned digit(unsigned long j) const { return rule_.digit(j); }
    unsigned long first_nonzero_after(unsigned long k) const;
    // p_k with p_k / base^{k!} the k-th convergent; q_k = base^{k!}
    Int convergent_numerator(unsigned k) const;
    LiouvilleCheck check(unsigned k) const;
    Ball value(long prec) const;

private:
    unsigned base_;
    DigitRule rule_;
};

// verifies the defining inequality for k = 1..horizon; raises AllZeroTail when
// the rule cannot guarantee infinitely many nonzero digits
LiouvilleNumber liouville_from_digits(unsigned base, DigitRule rule, unsigned horizon = 10);

struct PolyImageWitness {
    unsigned k = 0, r = 0;
    unsigned m = 0;             // convergent index used
    Rat delta;                  // no other root of f(X) - f(x) within delta of x
    Rat M;                      // |g| <= M on the delta-disc, f(X) - f(x) = (X - x) g(X)
    Int C;                      // f(p/q) = C / q^r
    unsigned long q_exponent = 0;  // q^r = base^{q_exponent}
    unsigned base = 2;
    bool chain_ok = false;      // 2^-m < delta, M 2^{kr} < 2^m, 0 < x - p/q < q^-m
    std::optional<bool> ball_ok;   // direct enclosure of |f(x) - C/q^r| when affordable
};

PolyImageWitness liouville_poly_image(const LiouvilleNumber& x, const QPoly& f, unsigned k, long prec);

struct SplitCheck {
    unsigned k = 0;
    bool within_horizon = false;
    bool positive = false;
    bool bounded = false;
};

struct SumSplit {
    std::vector<std::uint8_t> alpha, beta;  // digits j = 1..L at index j-1
    bool resums = false;                    // alpha_j + beta_j = x_j for every j
    std::vector<SplitCheck> checks;         // alpha-part tail bound per k
};

// alpha keeps the digits in blocks (2k-1)! <= j < (2k)!, beta the rest
SumSplit liouville_sum_split(const std::vector<std::uint8_t>& bits);

}  // namespace translab
