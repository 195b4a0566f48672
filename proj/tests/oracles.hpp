#pragma once

// Reference values computed independently of the library (mpmath at 60 digits,
// OEIS sequences, textbook closed forms) and frozen here.

#include "translab/ball.hpp"

#include <string>
#include <vector>

namespace oracle {

extern const char* const zeta3;
extern const char* const zeta5;
extern const char* const zeta7;
extern const char* const lehmer;
extern const char* const pi_coth_pi;        // sum over Z of 1/(n^2+1)
extern const char* const sum_inv_n2_plus_4;  // sum over Z of 1/(n^2+4)
extern const char* const sum_inv_n3_plus_2;  // sum over Z of 1/(n^3+2)
extern const char* const unilateral_inv_n2_plus_1;  // n >= 0
extern const char* const digamma_third;
extern const char* const exp_exp_tenth;  // exp(exp(1/10) - 1)
extern const char* const ln2_over_pi;

// zeta(2n) / pi^{2n}: n = 1..5 as p/q, n = 6..8 as strings
extern const std::vector<std::pair<long, long>> zeta_even_small;  // n = 1..5 as p/q
extern const char* const zeta12_over_pi12;
extern const char* const zeta14_over_pi14;
extern const char* const zeta16_over_pi16;

// Apery-type sequences: sum C(n,k)^2 C(n+k,k) and sum C(n,k)^2 C(n+k,k)^2, n = 0..11
extern const std::vector<const char*> apery_b_zeta2;
extern const std::vector<const char*> apery_b_zeta3;

// the Beukers integrals I_1..I_3 for zeta(2) and I_1..I_2 for zeta(3), by 2-D quadrature
extern const std::vector<const char*> beukers_quad_zeta2;
extern const std::vector<const char*> beukers_quad_zeta3;

// Pade denominator Q_3 for e^x, ascending coefficients
extern const std::vector<long> pade_q3;

// Bernoulli numbers B_0..B_12 (minus convention) as "p/q"
extern const std::vector<const char*> bernoulli_minus;

// Stirling numbers of the second kind S(6, l), l = 0..6
extern const std::vector<long> stirling2_row6;

// the decimal widened by ten units in its last printed digit
translab::Ball ball(const char* decimal, long prec);

}  // namespace oracle
