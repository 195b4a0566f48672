#pragma once

#include "translab/ball.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace translab {

// Integer polynomial in X1..Xn; a monomial is its exponent vector without trailing zeros.
class MPoly {
public:
    using Monomial = std::vector<unsigned>;
    MPoly() = default;
    MPoly(long c);
    MPoly(const Int& c);
    static MPoly var(unsigned k);  // X_k, k >= 1

    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant() const;
    unsigned nvars() const;
    unsigned total_degree() const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const MPoly& a, const MPoly& b) { return a.terms_ < b.terms_; }

    CBall eval(const std::vector<CBall>& x, long prec) const;
    std::string str() const;

private:
    void add_term(Monomial m, const Int& c);
    std::map<Monomial, Int> terms_;
};

// Exponentiation on the integer constants of the base ring.
//   Trivial: E(m) = 1, constants are dropped from exponents
//   Free:    constants stay in exponents, E(m) is a new unit
enum class BaseExp { Trivial, Free };

// Normal form sum_a p_a(X) E(a); exponents are themselves normal forms.
class ETowerElem {
public:
    struct Term;
    ETowerElem() = default;
    ETowerElem(const MPoly& p);
    ETowerElem(long c) : ETowerElem(MPoly(c)) {}
    static ETowerElem var(unsigned k) { return ETowerElem(MPoly::var(k)); }
    static ETowerElem exp(const ETowerElem& a, BaseExp mode = BaseExp::Trivial);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned height() const { return height_; }
    size_t size() const { return terms_.size(); }
    bool is_unit() const;  // +-E(a)
    // constant term of the coefficient of E(0)
    Int integer_constant() const;

    friend ETowerElem operator+(const ETowerElem& a, const ETowerElem& b);
    friend ETowerElem operator-(const ETowerElem& a, const ETowerElem& b);
    friend ETowerElem operator*(const ETowerElem& a, const ETowerElem& b);
    ETowerElem operator-() const;
    friend bool operator==(const ETowerElem& a, const ETowerElem& b);
    friend bool operator!=(const ETowerElem& a, const ETowerElem& b) { return !(a == b); }

    std::string str() const;

private:
    static ETowerElem from_sorted(std::vector<Term> terms);
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
    unsigned height_ = 0;
};

struct ETowerElem::Term {
    ETowerElem exponent;
    MPoly coeff;
};

// height, then term count, then termwise recursive comparison
int compare(const ETowerElem& a, const ETowerElem& b);
inline bool operator<(const ETowerElem& a, const ETowerElem& b) { return compare(a, b) < 0; }

struct RawExpr {
    enum class Kind { Int, Var, Add, Sub, Mul, Neg, Pow, Exp };
    Kind kind = Kind::Int;
    Int value;
    unsigned index = 0;  // Var: k of X_k; Pow: exponent
    std::vector<RawExpr> kids;
};

// elem := int | X<k> | elem+elem | elem-elem | elem*elem | elem^n | -elem | (elem) | E(elem)
RawExpr parse_raw(const std::string& s);
ETowerElem e_normalize(const RawExpr& e, BaseExp mode = BaseExp::Trivial);
ETowerElem parse_elem(const std::string& s, BaseExp mode = BaseExp::Trivial);

inline ETowerElem e_mul(const ETowerElem& a, const ETowerElem& b) { return a * b; }
inline ETowerElem e_add(const ETowerElem& a, const ETowerElem& b) { return a + b; }

// X_k -> point[k-1], E -> exp
CBall gamma_eval(const ETowerElem& a, const std::vector<CBall>& point, long prec);

}  // namespace translab
