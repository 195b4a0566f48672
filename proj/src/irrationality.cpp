#include "translab/irrationality.hpp"

#include "translab/combinatorics.hpp"
#include "translab/error.hpp"

#include <algorithm>

namespace translab {

namespace {

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

long bits_of(const Int& z) { return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// int int x^r y^s / (1 - xy), rational part; the zeta(2) part is [r == s]
Rat base_zeta2(unsigned r, unsigned s) {
    if (r == s) return -harmonic(r, 2);
    unsigned hi = std::max(r, s), lo = std::min(r, s);
    return (harmonic(hi, 1) - harmonic(lo, 1)) / Rat(hi - lo);
}

// -int int log(xy) x^r y^s / (1 - xy), rational part; the zeta(3) part is 2[r == s]
Rat base_zeta3(unsigned r, unsigned s) {
    if (r == s) return -2 * harmonic(r, 3);
    unsigned hi = std::max(r, s), lo = std::min(r, s);
    return (harmonic(hi, 2) - harmonic(lo, 2)) / Rat(hi - lo);
}

Int cleared(const Rat& q, const Int& scale) {
    Rat v = q * Rat(scale);
    v.canonicalize();
    return v.get_num() / v.get_den();
}

BeukersCertificate finish(ZetaTarget t, unsigned n, Rat a, Rat b, long prec) {
    a.canonicalize();
    b.canonicalize();
    BeukersCertificate c;
    c.target = t;
    c.n = n;
    c.a = a;
    c.b = b;
    c.d = lcm_upto(n);
    unsigned e = target_exponent(t);
    Int de = ipow(c.d, e);
    c.A = cleared(a, de);
    c.B = cleared(b, de);
    long wp = prec + bits_of(c.A) + 64;
    Ball z = zeta_target_ball(t, wp);
    Ball num = Ball(c.A, wp) * z + Ball(c.B, wp);
    c.I = (num / Ball(de, wp)).with_prec(prec);
    if (t == ZetaTarget::Zeta2) {
        Ball phi = (sqrt(Ball(5, wp)) - Ball(1, wp)).mul_2exp(-1);
        c.bound = (pow(phi, 5ul * n) * z).with_prec(prec);
    } else {
        c.bound = (z.mul_2exp(1) / pow(Ball(27, wp), n)).with_prec(prec);
    }
    return c;
}

}  // namespace

const char* target_name(ZetaTarget t) { return t == ZetaTarget::Zeta2 ? "zeta2" : "zeta3"; }

ZetaTarget parse_target(const std::string& s) {
    if (s == "zeta2") return ZetaTarget::Zeta2;
    if (s == "zeta3") return ZetaTarget::Zeta3;
    fail(ErrorKind::Parse, "unknown target '" + s + "' (expected zeta2 or zeta3)");
}

Ball zeta_target_ball(ZetaTarget t, long prec) {
    if (t == ZetaTarget::Zeta2) return sqr(Ball::pi(prec)) / Ball(6, prec);
    return Ball::zeta(3, prec);
}

QPoly shifted_legendre(unsigned n) {
    std::vector<Rat> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Int v = binomial(n, k) * binomial(n + k, k);
        c[k] = Rat(k % 2 ? Int(-v) : v);
    }
    return QPoly(std::move(c));
}

bool BeukersCertificate::integral() const {
    Int de = ipow(d, target_exponent(target));
    Rat qa = a * Rat(de), qb = b * Rat(de);
    qa.canonicalize();
    qb.canonicalize();
    return qa.get_den() == 1 && qb.get_den() == 1;
}

bool BeukersCertificate::within_bound() const {
    if (certainly_le(I.abs(), bound)) return true;
    if (sgn(b) != 0) return false;
    // I = a zeta exactly: compare |a| with the factor multiplying zeta in the bound
    Rat aa = ::abs(a);
    if (target == ZetaTarget::Zeta3) return aa <= Rat(2) / Rat(ipow(Int(27), n));
    if (n == 0) return aa <= 1;
    long wp = I.prec() + 32;
    Ball phi = (sqrt(Ball(5, wp)) - Ball(1, wp)).mul_2exp(-1);
    return certainly_le(Ball(aa, wp), pow(phi, 5ul * n));
}

BeukersCertificate beukers_zeta2(unsigned n, long prec) {
    QPoly P = shifted_legendre(n);
    Rat a(0), b(0);
    for (unsigned r = 0; r <= n; ++r) {
        for (unsigned s = 0; s <= n; ++s) {
            Int cs = binomial(n, s);
            if (s % 2) cs = -cs;
            Rat w = P[r] * Rat(cs);
            if (r == s) a += w;
            b += w * base_zeta2(r, s);
        }
    }
    return finish(ZetaTarget::Zeta2, n, a, b, prec);
}

BeukersCertificate beukers_zeta3(unsigned n, long prec) {
    QPoly P = shifted_legendre(n);
    Rat a(0), b(0);
    for (unsigned r = 0; r <= n; ++r) {
        for (unsigned s = 0; s <= n; ++s) {
            Rat w = P[r] * P[s];
            if (r == s) a += 2 * w;
            b += w * base_zeta3(r, s);
        }
    }
    return finish(ZetaTarget::Zeta3, n, a, b, prec);
}

BeukersCertificate beukers(ZetaTarget t, unsigned n, long prec) {
    return t == ZetaTarget::Zeta2 ? beukers_zeta2(n, prec) : beukers_zeta3(n, prec);
}

GapReport irrationality_gap_report(ZetaTarget t, unsigned n_max, long prec) {
    if (n_max < 1) fail(ErrorKind::Precondition, "gap report needs n_max >= 1");
    GapReport rep;
    rep.target = t;
    unsigned e = target_exponent(t);
    for (unsigned n = 1; n <= n_max; ++n) {
        BeukersCertificate c = beukers(t, n, prec);
        long wp = prec + bits_of(c.A) + 64;
        GapRow row;
        row.n = n;
        row.product = (Ball(c.A, wp) * zeta_target_ball(t, wp) + Ball(c.B, wp)).abs().with_prec(prec);
        row.kpower = (pow(Ball(3, prec), static_cast<unsigned long>(e) * n) * c.bound).with_prec(prec);
        row.margin = Ball(1, prec) - row.product;
        rep.rows.push_back(std::move(row));
    }
    const GapRow& last = rep.rows.back();
    if (!last.product.positive()) fail(ErrorKind::Undecided, "last product is not certified positive");
    rep.rate = exp(log(last.product) / Ball(static_cast<long>(last.n), prec));
    return rep;
}

Ball PadePair::remainder_bound(const Ball& x) const {
    long p = x.prec();
    Ball ax = x.abs();
    Ball num = Ball(factorial(n), p) * pow(ax, 2ul * n + 1) * exp(ax);
    return num / Ball(factorial(2ul * n + 1), p);
}

Ball PadePair::remainder(const Ball& x) const { return eval_ball(Q, x) * exp(x) - eval_ball(P, x); }

PadePair pade_exp(unsigned n) {
    if (n < 1) fail(ErrorKind::Precondition, "pade_exp needs n >= 1");
    PadePair pp;
    pp.n = n;
    QPoly T(Rat(1));
    for (unsigned j = n + 1; j <= 2 * n; ++j) T *= QPoly(std::vector<Rat>{Rat(-static_cast<long>(j)), Rat(1)});
    pp.T = T;
    // delta^m e^x = e^x sum_l S(m, l) x^l with delta = x d/dx
    std::vector<Rat> q(n + 1, Rat(0));
    for (unsigned m = 0; m <= n; ++m)
        for (unsigned l = 0; l <= m; ++l) q[l] += T[m] * Rat(stirling2(m, l));
    pp.Q = QPoly(std::move(q));
    std::vector<Rat> p(n + 1);
    Int nf = factorial(n);
    for (unsigned k = 0; k <= n; ++k) {
        Rat c(factorial(2 * n - k) * binomial(n, k), nf);
        c.canonicalize();
        p[k] = n % 2 ? Rat(-c) : c;
    }
    pp.P = QPoly(std::move(p));
    for (unsigned k = 0; k <= n; ++k)
        if (pp.P[k] != T.eval(Rat(k)) / Rat(factorial(k)))
            fail(ErrorKind::Internal, "Pade numerator disagrees with T_n(k)/k!");
    return pp;
}

SequenceReport irrationality_sequence_check(const std::function<Ball(long)>& x,
                                            const std::vector<std::pair<Int, Int>>& pq, long prec) {
    SequenceReport rep;
    for (size_t i = 0; i < pq.size(); ++i) {
        const auto& [p, q] = pq[i];
        if (sgn(q) <= 0) fail(ErrorKind::Precondition, "q_n must be positive");
        SequenceRow row;
        row.n = static_cast<unsigned>(i + 1);
        row.p = p;
        row.q = q;
        Int g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        row.coprime = g == 1;
        long wp = prec + bits_of(q) + 32;
        for (int attempt = 0;; ++attempt) {
            Ball xv = x(wp);
            Ball gap = (Ball(q, wp) * xv - Ball(p, wp)).abs();
            if (!gap.contains_zero()) {
                row.gap = gap.with_prec(prec);
                break;
            }
            if (xv.is_exact() && gap.is_exact())
                fail(ErrorKind::Precondition, "x equals p_" + std::to_string(row.n) + "/q_" + std::to_string(row.n));
            if (attempt == 6) fail(ErrorKind::Undecided, "|q x - p| not separated from 0 at n = " + std::to_string(row.n));
            wp *= 2;
        }
        rep.rows.push_back(std::move(row));
    }
    size_t k = rep.rows.size();
    if (k == 0) return rep;
    size_t from = k - 1;
    while (from > 0 && certainly_lt(rep.rows[from].gap, rep.rows[from - 1].gap)) --from;
    rep.decreasing_from = from;
    return rep;
}

}  // namespace translab
