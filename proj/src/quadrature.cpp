#include "translab/quadrature.hpp"

#include "translab/bernoulli.hpp"
#include "translab/combinatorics.hpp"
#include "translab/error.hpp"

#include <cmath>

namespace translab {

namespace {

Mpfr mpfr_of(const Rat& q, mpfr_rnd_t rnd) {
    Mpfr r(64);
    mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
    return r;
}

double log2_of(const Mpfr& x) {
    if (mpfr_zero_p(x.get())) return -1e9;
    long e;
    double m = mpfr_get_d_2exp(&e, x.get(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

// sup of |y cot(pi y)| on |y| <= R < 1, from its power series and zeta(2k) <= 33/20
Mpfr ycot_sup(const Rat& R) {
    Rat r2 = R * R;
    Rat b = Rat(1, 3) * (1 + Rat(33, 10) * r2 / (1 - r2));
    return mpfr_of(b, MPFR_RNDU);
}

struct Panel {
    Rat centre;  // 0 for the one-sided panel [0, h]
    Rat h;
    Rat rho;
    bool one_sided;
    int K = 0;
    Mpfr err{64};
};

// smallest K with C*M*(h/rho)^(K+1) below 2^-bits
void size_panel(Panel& p, const PvIntegrand& q, double bits) {
    Rat R = p.centre + p.rho;
    Mpfr M = rad_mul(q.sup(mpfr_of(R, MPFR_RNDU)), ycot_sup(R));
    Rat ratio = p.h / p.rho;
    Rat C = (p.one_sided ? p.h : 2 * p.h) / (1 - ratio);
    double lr = std::log2(ratio.get_d());
    double lcm = log2_of(M) + std::log2(C.get_d());
    int K = static_cast<int>(std::ceil((-bits - lcm) / lr)) - 1;
    p.K = std::max(K, 2);
    Rat pw = C;
    for (int k = 0; k <= p.K; ++k) pw *= ratio;
    p.err = rad_mul(M, rad_from_rat(pw));
}

Ball panel_integral(const Panel& p, const PvIntegrand& q, long wp) {
    std::vector<Ball> qj = q.jet(p.centre, p.K, wp);
    std::vector<Ball> cj = sgn(p.centre) == 0 ? ycot_jet_at_zero(p.K, wp) : ycot_jet(p.centre, p.K, wp);
    Ball hb(p.h, wp);
    Ball hp = hb;  // h^(m+1)
    Ball total(wp);
    for (int m = 0; m <= p.K; ++m) {
        if (p.one_sided || m % 2 == 0) {
            Ball fm(wp);
            for (int i = 0; i <= m; ++i) {
                const Ball& a = qj[static_cast<size_t>(i)];
                if (a.is_exact() && mpfr_zero_p(a.mid().get())) continue;
                fm += a * cj[static_cast<size_t>(m - i)];
            }
            Ball w = hp / Ball(m + 1, wp);
            if (!p.one_sided) w = w.mul_2exp(1);
            total += fm * w;
        }
        hp *= hb;
    }
    return total.add_error(p.err);
}

}  // namespace

std::vector<Ball> ycot_jet_at_zero(int K, long prec) {
    std::vector<Ball> c(static_cast<size_t>(K + 1), Ball(prec));
    Ball pi = Ball::pi(prec);
    Ball inv_pi = Ball(1, prec) / pi;
    c[0] = inv_pi;
    Ball pw = inv_pi;  // pi^(2k-1)
    Ball pi2 = pi * pi;
    for (int k = 1; 2 * k <= K; ++k) {
        pw *= pi2;
        c[static_cast<size_t>(2 * k)] = -(Ball(zeta_even(static_cast<unsigned long>(k)), prec) * pw).mul_2exp(1);
    }
    return c;
}

std::vector<Ball> ycot_jet(const Rat& y0, int K, long prec) {
    Ball pi = Ball::pi(prec);
    Ball arg = pi * Ball(y0, prec);
    Ball S = sin(arg), C = cos(arg);
    if (S.contains_zero()) fail(ErrorKind::SingularArgument, "cot jet centre at a pole");
    size_t n = static_cast<size_t>(K + 1);
    std::vector<Ball> s(n, Ball(prec)), co(n, Ball(prec)), a(n, Ball(prec));
    Ball f(1, prec);  // pi^m / m!
    for (size_t m = 0; m < n; ++m) {
        if (m > 0) f = f * pi / Ball(static_cast<long>(m), prec);
        switch (m % 4) {
        case 0: s[m] = S * f; co[m] = C * f; break;
        case 1: s[m] = C * f; co[m] = -(S * f); break;
        case 2: s[m] = -(S * f); co[m] = -(C * f); break;
        default: s[m] = -(C * f); co[m] = S * f; break;
        }
    }
    for (size_t m = 0; m < n; ++m) {
        Ball acc = co[m];
        for (size_t j = 1; j <= m; ++j) acc -= s[j] * a[m - j];
        a[m] = acc / S;
    }
    Ball yb(y0, prec);
    std::vector<Ball> c(n, Ball(prec));
    for (size_t m = 0; m < n; ++m) {
        c[m] = yb * a[m];
        if (m > 0) c[m] += a[m - 1];
    }
    return c;
}

PvIntegrand pv_poly(const QPoly& q) {
    PvIntegrand r;
    r.jet = [q](const Rat& y0, int K, long prec) {
        QPoly s = q.shifted(y0);
        std::vector<Ball> out(static_cast<size_t>(K + 1), Ball(prec));
        for (int k = 0; k <= K && k <= s.degree(); ++k) out[static_cast<size_t>(k)] = Ball(s[static_cast<size_t>(k)], prec);
        return out;
    };
    r.sup = [q](const Mpfr& R) {
        Mpfr acc(64), t(64);
        for (int k = q.degree(); k >= 0; --k) {
            mpfr_mul(acc.get(), acc.get(), R.get(), MPFR_RNDU);
            Rat c = ::abs(q[static_cast<size_t>(k)]);
            mpfr_set_q(t.get(), c.get_mpq_t(), MPFR_RNDU);
            mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
        }
        return acc;
    };
    return r;
}

PvIntegrand pv_odd_part(const QPoly& u) {
    QPoly d = u - u.reflected();
    auto [q, rem] = QPoly::divmod(d, QPoly::x());
    if (!rem.is_zero()) fail(ErrorKind::Internal, "odd part not divisible by y");
    return pv_poly(q);
}

PvIntegrand pv_sinh(const Ball& x) {
    PvIntegrand r;
    r.jet = [x](const Rat& y0, int K, long prec) {
        size_t n = static_cast<size_t>(K + 1);
        std::vector<Ball> out(n, Ball(prec));
        Ball xb = x.with_prec(prec);
        if (sgn(y0) == 0) {
            // 2 sinh(xy)/y = sum 2 x^(2m+1) y^(2m)/(2m+1)!
            Ball t = xb.mul_2exp(1);
            Ball x2 = xb * xb;
            for (size_t m = 0; m < n; m += 2) {
                out[m] = t;
                t = t * x2 / Ball(static_cast<long>((m + 2) * (m + 3)), prec);
            }
            return out;
        }
        Ball yb(y0, prec);
        Ball e = exp(xb * yb), ei = Ball(1, prec) / e;
        Ball sh = e - ei, ch = e + ei;  // twice sinh and cosh
        std::vector<Ball> s(n, Ball(prec));
        Ball f(1, prec);  // x^m / m!
        for (size_t m = 0; m < n; ++m) {
            if (m > 0) f = f * xb / Ball(static_cast<long>(m), prec);
            s[m] = (m % 2 == 0 ? sh : ch) * f;
        }
        for (size_t m = 0; m < n; ++m) {
            Ball acc = s[m];
            if (m > 0) acc -= out[m - 1];
            out[m] = acc / yb;
        }
        return out;
    };
    r.sup = [x](const Mpfr& R) {
        Mpfr a = x.abs_upper();
        Mpfr t(64);
        mpfr_mul(t.get(), a.get(), R.get(), MPFR_RNDU);
        mpfr_sinh(t.get(), t.get(), MPFR_RNDU);
        mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDU);
        if (mpfr_zero_p(R.get())) {
            mpfr_mul_2ui(t.get(), a.get(), 1, MPFR_RNDU);
            return t;
        }
        mpfr_div(t.get(), t.get(), R.get(), MPFR_RNDU);
        return t;
    };
    return r;
}

PvResult pv_cot_integral(const PvIntegrand& q, long prec) {
    const unsigned long cap = 1ul << 20;
    for (long P = 1, extra = 0;; P *= 2, extra += 32) {
        double bits = static_cast<double>(prec + 8) + std::log2(static_cast<double>(P + 1));
        std::vector<Panel> panels;
        panels.push_back({Rat(0), Rat(1, 8), Rat(9, 10), true});
        Rat h(3, 16 * P);
        for (long j = 0; j < P; ++j)
            panels.push_back({Rat(1, 8) + (2 * j + 1) * h, h, Rat(7, 20), false});
        unsigned long nodes = 0;
        int Kmax = 0;
        for (auto& p : panels) {
            size_panel(p, q, bits);
            nodes += static_cast<unsigned long>(p.K + 1);
            Kmax = std::max(Kmax, p.K);
        }
        if (nodes > cap) fail(ErrorKind::InsufficientPrecision, "principal-value quadrature exceeded the node cap");
        if (Kmax > 768) continue;
        long wp = prec + 3 * Kmax + 96 + extra;
        Ball total(wp);
        for (auto& p : panels) total += panel_integral(p, q, wp);
        // accept when the radius is within 2^-prec of max(1, |value|)
        Mpfr lim(64);
        Mpfr scale = total.abs_upper();
        if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDU);
        mpfr_mul_2si(lim.get(), scale.get(), -prec, MPFR_RNDD);
        if (mpfr_cmp(total.rad().get(), lim.get()) <= 0) return {total.with_prec(prec), nodes};
    }
}

}  // namespace translab
