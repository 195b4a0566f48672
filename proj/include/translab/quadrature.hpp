#pragma once

#include "translab/ball.hpp"
#include "translab/poly.hpp"

#include <functional>
#include <vector>

namespace translab {

// An even entire function q on which the principal-value integral
//   PV int_{-1/2}^{1/2} u(y) cot(pi y) dy = int_0^{1/2} q(y) * y cot(pi y) dy
// has been reduced, with q(y) = (u(y) - u(-y)) / y.
struct PvIntegrand {
    // Taylor coefficients of q at the exact centre y0, up to degree K
    std::function<std::vector<Ball>(const Rat& y0, int K, long prec)> jet;
    // an upper bound for |q| on the complex disc |y| <= R
    std::function<Mpfr(const Mpfr& R)> sup;
};

PvIntegrand pv_poly(const QPoly& q);       // q given directly
PvIntegrand pv_odd_part(const QPoly& u);  // q = (u(y) - u(-y)) / y
PvIntegrand pv_sinh(const Ball& x);  // u(y) = e^{xy}, q(y) = 2 sinh(xy)/y

struct PvResult {
    Ball value;
    unsigned long nodes = 0;
};

// Composite Taylor rule with Cauchy remainder bounds. The target radius is
// about 2^-prec relative to max(1, |value|); InsufficientPrecision past 2^20 nodes.
PvResult pv_cot_integral(const PvIntegrand& q, long prec);

// Taylor coefficients of y cot(pi y) at 0 (exact series from zeta(2k)) and at y0 > 0
std::vector<Ball> ycot_jet_at_zero(int K, long prec);
std::vector<Ball> ycot_jet(const Rat& y0, int K, long prec);

}  // namespace translab
