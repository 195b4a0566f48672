#include "translab/bernoulli.hpp"

#include "translab/combinatorics.hpp"
#include "translab/error.hpp"
#include "translab/quadrature.hpp"

#include <mutex>
#include <vector>

namespace translab {

namespace {

std::mutex bern_mu;
std::vector<Rat> bern_minus{Rat(1)};

// sum_{k=0}^{n} C(n+1, k) B_k^- = 0
const Rat& bminus(unsigned long n) {
    std::lock_guard<std::mutex> lock(bern_mu);
    while (bern_minus.size() <= n) {
        unsigned long m = bern_minus.size();
        if (m > 1 && m % 2 == 1) {
            bern_minus.emplace_back(0);
            continue;
        }
        Rat acc(0);
        for (unsigned long k = 0; k < m; ++k)
            if (sgn(bern_minus[k]) != 0) acc += Rat(binomial(static_cast<long>(m + 1), static_cast<long>(k))) * bern_minus[k];
        Rat b = -acc / Rat(Int(m + 1));
        b.canonicalize();
        bern_minus.push_back(b);
    }
    return bern_minus[n];
}

Rat floor_rat(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rat(fl);
}

}  // namespace

Rat bernoulli_number(unsigned long n, BernoulliSign sign) {
    Rat b = bminus(n);
    if (sign == BernoulliSign::Plus && n % 2 == 1) b = -b;
    return b;
}

QPoly bernoulli_poly(unsigned long n) {
    std::vector<Rat> c(n + 1);
    for (unsigned long k = 0; k <= n; ++k)
        c[n - k] = Rat(binomial(static_cast<long>(n), static_cast<long>(k))) * bminus(k);
    return QPoly(std::move(c));
}

Rat bernoulli_function(unsigned long n, const Rat& x) { return bernoulli_poly(n).eval(x - floor_rat(x)); }

Ball bernoulli_function(unsigned long n, const Ball& x) {
    Rat lo = x.lower_rat(), hi = x.upper_rat();
    Rat fl = floor_rat(lo);
    QPoly b = bernoulli_poly(n);
    if (floor_rat(hi) == fl) return eval_ball(b, x - Ball(fl, x.prec()));
    if (n == 1 || floor_rat(hi) != fl + 1)
        fail(ErrorKind::Undecided, "ball straddles a jump of the Bernoulli function");
    // B_n is continuous across integers for n >= 2
    Ball left = eval_ball(b, Ball::interval(lo - fl, Rat(1), x.prec()));
    Ball right = eval_ball(b, Ball::interval(Rat(0), hi - fl - 1, x.prec()));
    return Ball::hull(left, right);
}

SymbolicSum bernoulli_fourier(unsigned long n, long k) {
    if (n == 0) fail(ErrorKind::Precondition, "Fourier coefficient needs n >= 1");
    if (k == 0) return SymbolicSum();
    ExactScalar denom = pow(ExactScalar(2 * k) * ExactScalar::i(), n);
    ExactScalar c = -ExactScalar(factorial(n)) / denom;
    return SymbolicSum(c) * SymbolicSum::pi(-static_cast<long>(n));
}

Rat zeta_even(unsigned long n) {
    if (n == 0) fail(ErrorKind::Precondition, "zeta_even needs n >= 1");
    Int two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, 2 * n - 1);
    Rat r = Rat(two) * bminus(2 * n) / Rat(factorial(2 * n));
    if (n % 2 == 0) r = -r;
    r.canonicalize();
    return r;
}

ConjugateBernoulli conj_bernoulli(unsigned long n, long prec) {
    if (n < 2) fail(ErrorKind::Precondition, "conjugate Bernoulli numbers need n > 1");
    if (n % 2 == 0) return {n, Ball(prec), 0};
    // B~_n = int_0^{1/2} (B_n(1-y) - B_n(y)) cot(pi y) dy
    QPoly b = bernoulli_poly(n);
    QPoly d = b.reflected().shifted(Rat(-1)) - b;  // B_n(1 - y) - B_n(y)
    auto [q, rem] = QPoly::divmod(d, QPoly::x());
    if (!rem.is_zero()) fail(ErrorKind::Internal, "conjugate Bernoulli integrand not regular at 0");
    PvResult r = pv_cot_integral(pv_poly(q), prec);
    return {n, r.value, r.nodes};
}

ConjugateBernoulli conj_bernoulli_half(unsigned long n, long prec) {
    // u(y) = B_n(1/2 - y) on (-1/2, 1/2)
    QPoly u = bernoulli_poly(n).shifted(Rat(1, 2)).reflected();
    QPoly odd = u - u.reflected();
    if (odd.is_zero()) return {n, Ball(prec), 0};
    PvResult r = pv_cot_integral(pv_odd_part(u), prec);
    return {n, r.value, r.nodes};
}

Ball omega_coeff(unsigned long j, long prec) {
    if (j % 2 == 0) return Ball(prec);
    return pv_cot_integral(pv_poly(QPoly::monomial(Rat(2), j - 1)), prec).value;
}

Ball omega_function(const Ball& x, long prec) {
    if (x.is_exact() && mpfr_zero_p(x.mid().get())) return Ball(prec);
    return pv_cot_integral(pv_sinh(x), prec).value;
}

Ball zeta_odd_via_conj(unsigned long n, long prec) {
    if (n == 0) fail(ErrorKind::Precondition, "zeta_odd_via_conj needs n >= 1");
    unsigned long m = 2 * n + 1;
    long wp = prec + 16;
    Ball bt = conj_bernoulli(m, wp).value;
    Ball pi = Ball::pi(wp);
    Ball v = pow(pi, m) * bt.mul_2exp(static_cast<long>(2 * n)) / Ball(factorial(m), wp);
    if (n % 2 == 1) v = -v;
    return v;
}

}  // namespace translab
