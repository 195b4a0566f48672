#pragma once

#include "translab/ball.hpp"
#include "translab/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace translab {

enum class ZetaTarget { Zeta2, Zeta3 };
const char* target_name(ZetaTarget t);
ZetaTarget parse_target(const std::string& s);
inline unsigned target_exponent(ZetaTarget t) { return t == ZetaTarget::Zeta2 ? 2 : 3; }
Ball zeta_target_ball(ZetaTarget t, long prec);

// P_n(x) = sum_k (-1)^k C(n,k) C(n+k,k) x^k
QPoly shifted_legendre(unsigned n);

// I_n = (A zeta + B) / d^e with I_n the Beukers double integral
struct BeukersCertificate {
    ZetaTarget target = ZetaTarget::Zeta2;
    unsigned n = 0;
    Int A, B, d;
    Rat a, b;  // I_n = a zeta + b before clearing denominators
    Ball I;
    Ball bound;
    bool integral() const;  // d^e a and d^e b are integers
    bool within_bound() const;  // |I| <= bound, certified
    bool nonzero() const { return !I.contains_zero(); }
};

BeukersCertificate beukers_zeta2(unsigned n, long prec);
BeukersCertificate beukers_zeta3(unsigned n, long prec);
BeukersCertificate beukers(ZetaTarget t, unsigned n, long prec);

struct GapRow {
    unsigned n = 0;
    Ball product;  // |I_n| d_n^e = |A zeta + B|
    Ball kpower;   // 3^{e n} times the a-priori bound on |I_n|
    Ball margin;   // 1 - product; positive once the integer |A zeta + B| is forced below 1
};

struct GapReport {
    ZetaTarget target = ZetaTarget::Zeta2;
    std::vector<GapRow> rows;
    Ball rate;  // product^{1/n} at the last row
    bool shrinking() const { return rate.positive() && certainly_lt(rate, Ball(1, rate.prec())); }
};

GapReport irrationality_gap_report(ZetaTarget t, unsigned n_max, long prec);

// Q_n e^x = P_n(x) + R_n(x) with R_n = O(x^{2n+1})
struct PadePair {
    unsigned n = 0;
    QPoly T;  // prod_{j=n+1}^{2n} (X - j)
    QPoly P, Q;
    Ball remainder_bound(const Ball& x) const;  // n! |x|^{2n+1} e^{|x|} / (2n+1)!
    Ball remainder(const Ball& x) const;         // Q(x) e^x - P(x)
};

PadePair pade_exp(unsigned n);

struct SequenceRow {
    unsigned n = 0;
    Int p, q;
    bool coprime = true;
    Ball gap;  // |q x - p|
};

struct SequenceReport {
    std::vector<SequenceRow> rows;
    size_t decreasing_from = 0;  // rows[decreasing_from..] certified strictly decreasing
    size_t decreasing_length() const { return rows.size() - decreasing_from; }
    static constexpr const char* label = "finite evidence, not a proof";
};

// x is given as a function of working precision; pq lists (p_n, q_n) for n = 1..N
SequenceReport irrationality_sequence_check(const std::function<Ball(long)>& x,
                                            const std::vector<std::pair<Int, Int>>& pq, long prec);

}  // namespace translab
