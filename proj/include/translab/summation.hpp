#pragma once

#include "translab/ball.hpp"
#include "translab/closedform.hpp"
#include "translab/poly.hpp"
#include "translab/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace translab {

struct SeriesValue {
    std::optional<SymbolicSum> exact;  // present when every pole is exact
    CBall value;

    bool has_closed_form() const { return exact.has_value(); }
    std::string closed_form() const { return exact ? exact->str() : std::string(); }
    Ball real() const;  // the value is real; raises Undecided otherwise
};

// One pole of A/B at n = beta, with A/B = sum_j C_j/(n - beta)^j near it.
struct PoleTerm {
    bool exact = false;
    ExactScalar root;  // when exact
    CBall root_ball;
    unsigned multiplicity = 1;
    std::vector<ExactScalar> coeffs;     // C_1..C_m when exact
    std::vector<CBall> coeffs_ball;      // C_1..C_m always
};

struct RationalSeriesSpec {
    QPoly A, B;
    std::vector<PoleTerm> poles;
    bool all_exact() const;
};

// d^{k-1}/dz^{k-1} (pi cot pi z) = (2 pi i)^k sum_j A_{k,j} / (e^{2 pi i z} - 1)^j
std::vector<Int> cot_derivative_coeffs(unsigned k);

// Q_m with d^m/dz^m (pi cot pi z) = pi^{m+1} Q_m(cot pi z); ascending coefficients
const std::vector<Int>& cot_power_poly(unsigned m);

// coefficients of w cot w up to w^K, by exact series division of w cos w by sin w
std::vector<Rat> cot_series_coeffs(unsigned K);
// zeta(2n)/pi^{2n} read off the cotangent series
Rat zeta_even_via_cot(unsigned n);

// sum over all integers n of 1/(n+z)^k; k = 1 in symmetric partial-sum order
SeriesValue bilateral_power_sum(const ExactScalar& z, unsigned k, long prec);
SeriesValue bilateral_power_sum(const CBall& z, unsigned k, long prec);

// partial fractions over exact roots in Q(i), certified balls for the rest
RationalSeriesSpec make_series_spec(const QPoly& A, const QPoly& B, long prec);

// sum over all integers of A(n)/B(n); deg B = deg A + 1 is taken in symmetric order
SeriesValue bilateral_rational_sum(const QPoly& A, const QPoly& B, long prec);

// sum over n >= 0 of A(n)/B(n) for B with simple rational roots, via the digamma
// function at rational arguments (closed form when denominators divide 4 or 6)
SeriesValue unilateral_rational_sum(const QPoly& A, const QPoly& B, long prec);

// sum over n >= 1 of 1/(n^2 + C^2)
SeriesValue unilateral_quadratic_sum(const Rat& C, long prec);

// sum over n >= 0 of z^n P(n), exact for |z| < 1
ExactScalar geometric_poly_sum(const QPoly& P, const ExactScalar& z);

// digamma at a rational argument that is not a nonpositive integer
SymbolicSum digamma_exact(const Rat& a);  // q in {1, 2, 3, 4, 6}
Ball digamma_ball(const Rat& a, long prec);

// Partial sums with rigorous tails: sum_{|n|<=N} (symmetric) or sum_{0<=n<=N}.
Ball symmetric_partial_sum(const QPoly& A, const QPoly& B, long N, long prec);
Ball unilateral_partial_sum(const QPoly& A, const QPoly& B, long N, long prec);

// bound on sum_{n>N} |U(n)/V(n)| when deg V >= deg U + 2 and V has no zero past N
Rat rational_tail_bound(const QPoly& U, const QPoly& V, long N);

}  // namespace translab
