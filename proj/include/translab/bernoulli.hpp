#pragma once

#include "translab/ball.hpp"
#include "translab/closedform.hpp"
#include "translab/poly.hpp"

namespace translab {

enum class BernoulliSign { Plus, Minus };

// B_n^+ = B_n(1), B_n^- = B_n(0)
Rat bernoulli_number(unsigned long n, BernoulliSign sign = BernoulliSign::Minus);

// B_n(x), monic of degree n
QPoly bernoulli_poly(unsigned long n);

// periodic Bernoulli function B_n(x - [x])
Rat bernoulli_function(unsigned long n, const Rat& x);
Ball bernoulli_function(unsigned long n, const Ball& x);

// n-th Fourier coefficient at k: -n!/(2 pi i k)^n, and 0 for k = 0
SymbolicSum bernoulli_fourier(unsigned long n, long k);

// the rational r with zeta(2n) = r * pi^(2n)
Rat zeta_even(unsigned long n);

struct ConjugateBernoulli {
    unsigned long n = 0;
    Ball value;
    unsigned long quadrature_nodes = 0;
};

// conjugate Bernoulli number at 0 (n odd, n >= 3; even n > 1 give exact 0)
ConjugateBernoulli conj_bernoulli(unsigned long n, long prec);
// the conjugate Bernoulli function at 1/2, by the shifted principal-value integral
ConjugateBernoulli conj_bernoulli_half(unsigned long n, long prec);

// Omega_j = PV int_{-1/2}^{1/2} y^j cot(pi y) dy
Ball omega_coeff(unsigned long j, long prec);
// Omega(x) = PV int_{-1/2}^{1/2} e^{xy} cot(pi y) dy
Ball omega_function(const Ball& x, long prec);

// zeta(2n+1) from the conjugate Bernoulli number of index 2n+1
Ball zeta_odd_via_conj(unsigned long n, long prec);

}  // namespace translab
