#pragma once

#include "translab/ball.hpp"
#include "translab/closedform.hpp"
#include "translab/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace translab {

// A declared exponent symbol. Symbols are assumed linearly independent over Q,
// so exponents compare exactly through their coordinates.
struct ExpSymbol {
    std::string name;
    ClosedForm value;
    friend bool operator==(const ExpSymbol& a, const ExpSymbol& b) { return a.name == b.name && a.value == b.value; }
};

using SymbolList = std::vector<ExpSymbol>;
// "s1=1,s2=2i,s3=pi*i"
SymbolList parse_symbols(const std::string& s);
// the coordinates of mu over a symbol list
using Exponent = std::vector<Rat>;

CBall exponent_value(const SymbolList& syms, const Exponent& e, long prec);

// sum of lambda_i e^{mu_i z}, lambda_i Gaussian rationals
class ExpPoly {
public:
    ExpPoly() = default;
    explicit ExpPoly(SymbolList syms) : syms_(std::move(syms)) {}
    static ExpPoly constant(const SymbolList& syms, const ExactScalar& c);
    static ExpPoly term(const SymbolList& syms, const ExactScalar& c, Exponent e);
    // "c1*exp((a*s1+b*s2)*z) + c0"
    static ExpPoly parse(const std::string& s, const SymbolList& syms);

    const SymbolList& symbols() const { return syms_; }
    const std::map<Exponent, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add(Exponent e, const ExactScalar& c);

    ExpPoly with_symbols(const SymbolList& syms) const;  // syms must extend symbols()
    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    ExpPoly operator-() const;
    friend bool operator==(const ExpPoly& a, const ExpPoly& b);

    CBall eval(const CBall& z, long prec) const;
    CBall eval_derivative(const CBall& z, unsigned order, long prec) const;
    // sum |lambda| |mu|^order e^{|mu| R}, an upper bound for the order-th derivative on |z| = R
    Ball sup_bound(const Ball& R, unsigned order, long prec) const;
    std::string str() const;

private:
    SymbolList syms_;
    std::map<Exponent, ExactScalar> terms_;
};

SymbolList merge_symbols(const SymbolList& a, const SymbolList& b);
ExpPoly ep_mul(const ExpPoly& f, const ExpPoly& g);

struct SupportInfo {
    size_t dim = 0;
    std::vector<Exponent> basis;
};
SupportInfo support_dim(const ExpPoly& f);
bool is_simple(const ExpPoly& f);

struct RittFactor {
    bool exact = false;
    ExactScalar alpha;  // when exact
    CBall alpha_ball;
};

// f = unit * prod (1 - alpha_l e^{rho z}), unit = c e^{mu0 z}
struct RittFactorization {
    SymbolList symbols;
    ExactScalar unit_coeff;
    Exponent unit_exponent;
    Exponent rho;
    std::vector<long> powers;        // exponents of w = e^{rho z} present in f / unit
    std::vector<RittFactor> factors;
    // coefficients of unit_coeff * prod (1 - alpha w), lowest power first
    std::vector<CBall> expand(long prec) const;
};

RittFactorization ritt_factor_simple(const ExpPoly& f, long prec);
// every expanded coefficient encloses the matching exact coefficient of f
bool ritt_roundtrip(const ExpPoly& f, const RittFactorization& r, long prec);

struct SinDivision {
    ExpPoly G;
    bool verified = false;
    double max_radius = 0;  // largest radius among the 16 check evaluations
};

// f = sin(pi z) G for f vanishing at every integer; needs a symbol with value pi*i
SinDivision divide_by_sin(const ExpPoly& f, long prec, std::uint64_t seed = 20240601);

// sum P_i(z) e^{mu_i z} with Gaussian-rational polynomial coefficients
class PolyExpPoly {
public:
    PolyExpPoly() = default;
    explicit PolyExpPoly(SymbolList syms) : syms_(std::move(syms)) {}
    PolyExpPoly(const ExpPoly& f);
    // duplicate exponents raise DuplicateExponent
    static PolyExpPoly from_terms(const SymbolList& syms, const std::vector<std::pair<Exponent, GPoly>>& terms);
    // like ExpPoly::parse, coefficients may be polynomials in z, e.g. "(z^2+1)*exp(s*z)"
    static PolyExpPoly parse(const std::string& s, const SymbolList& syms);

    const SymbolList& symbols() const { return syms_; }
    const std::map<Exponent, GPoly>& terms() const { return terms_; }
    void add(Exponent e, const GPoly& p);
    CBall eval(const CBall& z, long prec) const;
    Ball omega(long prec) const;  // max |mu_i|, an upper enclosure
    unsigned degree_sum() const;
    size_t size() const { return terms_.size(); }
    std::string str() const;

private:
    SymbolList syms_;
    std::map<Exponent, GPoly> terms_;
};

unsigned long real_zero_bound(const PolyExpPoly& f);
long complex_zero_bound(const PolyExpPoly& f, const Ball& R, bool sharp);

// winding number of f around |z| = R from certified arcs
long count_zeros_numeric(const PolyExpPoly& f, const Ball& R, long prec);

// certified sign changes of a real f on a grid of N+1 points in [a, b]; a lower
// bound for the number of real zeros there
unsigned real_sign_changes(const PolyExpPoly& f, const Rat& a, const Rat& b, unsigned N, long prec);

struct InterpReport {
    Ball det_abs;
    Ball bound;
    bool holds = false;
};

// |det(f_j^{(sigma_i)}(zeta_i))| against (R/r)^{-L(L-1)/2 + sum sigma} L! prod_j max_i |f_j^{(sigma_i)}|_R
InterpReport interp_det_check(const std::vector<ExpPoly>& fs, const std::vector<CBall>& zetas, const Rat& r,
                              const Rat& R, const std::vector<unsigned>& sigmas, long prec);

CBall cball_det(std::vector<std::vector<CBall>> m);

}  // namespace translab
