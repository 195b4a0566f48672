#include "translab/roots.hpp"

#include <cmath>
#include <complex>

namespace translab {

using cld = std::complex<long double>;

Rat simplest_rational(const Rat& lo, const Rat& hi) {
    if (lo > hi) return simplest_rational(hi, lo);
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rat(0);
    if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (lo.get_den() == 1) return lo;
    if (Rat(fl + 1) <= hi) return Rat(fl + 1);
    Rat inner = simplest_rational(Rat(1) / (hi - fl), Rat(1) / (lo - fl));
    return Rat(fl) + Rat(1) / inner;
}

CBall midpoint(const CBall& z) { return CBall(midpoint(z.re()), midpoint(z.im())); }

Ball midpoint(const Ball& x) { return Ball::from_mid_rad(x.mid(), Mpfr(64), x.prec()); }

namespace {

long double to_ld(const ExactScalar& s, bool imag) {
    const Rat& q = imag ? s.im() : s.re();
    return static_cast<long double>(q.get_d());
}

// Aberth-Ehrlich iteration on a square-free polynomial in long double.
std::vector<cld> aberth(const GPoly& p) {
    int d = p.degree();
    std::vector<cld> a(d + 1);
    for (int k = 0; k <= d; ++k) {
        const ExactScalar c = p[static_cast<size_t>(k)];
        a[k] = cld(to_ld(c, false), to_ld(c, true));
    }
    auto eval = [&](cld z, cld& dp) {
        cld v = 0;
        dp = 0;
        for (int k = d; k >= 0; --k) {
            dp = dp * z + v;
            v = v * z + a[k];
        }
        return v;
    };
    // Cauchy-type radius for the starting circle
    long double rmax = 0;
    for (int k = 0; k < d; ++k) rmax = std::max(rmax, std::pow(std::abs(a[k] / a[d]), 1.0L / (d - k)));
    if (rmax == 0) rmax = 1;
    std::vector<cld> z(d);
    for (int k = 0; k < d; ++k) {
        long double th = 2 * M_PIl * k / d + 0.4L;
        z[k] = std::polar(rmax, th);
    }
    for (int it = 0; it < 500; ++it) {
        long double worst = 0;
        for (int i = 0; i < d; ++i) {
            cld dp;
            cld v = eval(z[i], dp);
            if (v == cld(0)) continue;
            cld ratio = v / dp;
            cld s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += cld(1) / (z[i] - z[j]);
            cld step = ratio / (cld(1) - ratio * s);
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

Mpfr ld_to_mpfr(long double v, long prec) {
    Mpfr m(prec);
    mpfr_set_ld(m.get(), v, MPFR_RNDN);
    return m;
}

bool certify(const GPoly& f, const GPoly& df, std::vector<CBall>& z, long prec, std::vector<CBall>& boxes) {
    int d = f.degree();
    boxes.clear();
    for (auto& zi : z) {
        // Newton polishing on midpoints
        for (int it = 0; it < 200; ++it) {
            CBall v = eval_cball(f, zi), dv = eval_cball(df, zi);
            if (dv.contains_zero()) break;
            CBall step = midpoint(v / dv);
            zi = midpoint(zi - step);
            Mpfr su = step.abs_upper();
            Mpfr za = zi.abs_upper();
            if (mpfr_zero_p(su.get())) break;
            long e = mpfr_get_exp(su.get()) - (mpfr_zero_p(za.get()) ? 0 : mpfr_get_exp(za.get()));
            if (e < -prec + 8) break;
        }
        CBall v = eval_cball(f, zi), dv = eval_cball(df, zi);
        Mpfr lo = dv.abs_lower();
        if (mpfr_zero_p(lo.get())) return false;
        Mpfr r(64);
        mpfr_div(r.get(), v.abs_upper().get(), lo.get(), MPFR_RNDU);
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(d), MPFR_RNDU);
        boxes.push_back(zi.add_error(r));
    }
    // disjointness: |z_i - z_j| > r_i + r_j, with boxes of half-width r
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            const CBall& a = boxes[i];
            const CBall& b = boxes[j];
            bool apart = !a.re().overlaps(b.re()) || !a.im().overlaps(b.im());
            if (!apart) return false;
        }
    }
    return true;
}

std::vector<CBall> isolate_squarefree(const GPoly& f, long prec) {
    int d = f.degree();
    if (d == 1) {
        CBall r = -(CBall(f[0], prec + 32) / CBall(f[1], prec + 32));
        return {r};
    }
    std::vector<cld> z0 = aberth(f);
    GPoly df = f.derivative();
    for (long p = prec + 32; p <= 16 * prec + 4096; p *= 2) {
        std::vector<CBall> z;
        for (auto& c : z0) z.emplace_back(Ball::from_mid_rad(ld_to_mpfr(c.real(), p), Mpfr(64), p),
                                          Ball::from_mid_rad(ld_to_mpfr(c.imag(), p), Mpfr(64), p));
        std::vector<CBall> boxes;
        if (certify(f, df, z, p, boxes)) return boxes;
        // restart Aberth from a perturbed circle when clusters defeat certification
        for (auto& c : z0) c *= cld(1.0L + 1e-9L, 1e-9L);
    }
    fail(ErrorKind::InsufficientPrecision, "root isolation did not certify disjoint discs");
}

}  // namespace

std::vector<RootEnclosure> isolate_roots(const GPoly& p, long prec) {
    if (p.degree() < 1) return {};
    std::vector<RootEnclosure> out;
    auto factors = p.square_free();
    for (size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() < 1) continue;
        for (auto& b : isolate_squarefree(factors[k], prec))
            out.push_back({b, static_cast<unsigned>(k + 1)});
    }
    return out;
}

std::vector<RootEnclosure> isolate_roots(const QPoly& p, long prec) { return isolate_roots(to_gaussian(p), prec); }

namespace {

Int lcm_of_denominators(const GPoly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
        Rat im = c.im();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), im.get_den_mpz_t());
    }
    return l;
}

}  // namespace

std::vector<ExactRoot> gaussian_rational_roots(const GPoly& p, GPoly* rest) {
    std::vector<ExactRoot> out;
    if (p.degree() < 1) {
        if (rest) *rest = p.monic();
        return out;
    }
    GPoly remaining = p.monic();
    auto factors = p.square_free();
    for (size_t k = 0; k < factors.size(); ++k) {
        GPoly f = factors[k];
        if (f.degree() < 1) continue;
        // Gaussian-integer coefficients; a root u/v in lowest terms has v | lc,
        // so real and imaginary denominators divide N(lc)
        GPoly g = f.scaled(ExactScalar(Rat(lcm_of_denominators(f))));
        Rat nlc = g.lead().norm();
        Int D = nlc.get_num();
        // need box half-width < 1/(2 D^2)
        long bits = 2 * static_cast<long>(mpz_sizeinbase(D.get_mpz_t(), 2)) + 8;
        long prec = std::max<long>(128, 2 * bits + 64);
        std::vector<CBall> boxes;
        for (;; prec *= 2) {
            boxes = isolate_squarefree(f, prec);
            bool narrow = true;
            Mpfr lim(64);
            mpfr_set_ui_2exp(lim.get(), 1, -bits, MPFR_RNDD);
            for (auto& b : boxes) {
                if (mpfr_cmp(b.re().rad().get(), lim.get()) > 0 || mpfr_cmp(b.im().rad().get(), lim.get()) > 0)
                    narrow = false;
            }
            if (narrow || prec > 1 << 16) break;
        }
        for (auto& b : boxes) {
            Rat re = simplest_rational(b.re().lower_rat(), b.re().upper_rat());
            Rat im = simplest_rational(b.im().lower_rat(), b.im().upper_rat());
            if (re.get_den() > D || im.get_den() > D) continue;
            ExactScalar cand(re, im);
            if (!f.eval(cand).is_zero()) continue;
            out.push_back({cand, static_cast<unsigned>(k + 1)});
            GPoly lin(std::vector<ExactScalar>{-cand, ExactScalar(1)});
            for (size_t m = 0; m <= k; ++m) remaining = GPoly::divmod(remaining, lin).first;
        }
    }
    if (rest) *rest = remaining;
    return out;
}

std::vector<ExactRoot> gaussian_rational_roots(const QPoly& p, GPoly* rest) {
    return gaussian_rational_roots(to_gaussian(p), rest);
}

}  // namespace translab
