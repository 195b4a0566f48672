#include "translab/summation.hpp"

#include "translab/combinatorics.hpp"
#include "translab/error.hpp"

#include <algorithm>
#include <mutex>

namespace translab {

namespace {

Rat floor_rat(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return Rat(fl);
}

Rat frac_rat(const Rat& x) { return x - floor_rat(x); }

bool is_int(const ExactScalar& z) { return z.is_integer(); }

// (-1)^{k-1} pi^k / (k-1)!
SymbolicSum power_sum_prefactor(unsigned k) {
    Rat c = Rat(1) / Rat(factorial(k - 1));
    if (k % 2 == 0) c = -c;
    return SymbolicSum(ExactScalar(c)) * SymbolicSum::pi(static_cast<long>(k));
}

CBall power_sum_from_cot(const CBall& cotv, unsigned k, long prec) {
    const std::vector<Int>& q = cot_power_poly(k - 1);
    CBall acc(prec);
    for (size_t i = q.size(); i-- > 0;) acc = acc * cotv + CBall(Ball(q[i], prec));
    Ball pre = pow(Ball::pi(prec), k) / Ball(factorial(k - 1), prec);
    if (k % 2 == 0) pre = -pre;
    return acc * CBall(pre);
}

CBall cot_pi_exact_arg(const ExactScalar& z, long prec) {
    Rat f = frac_rat(z.re());
    if (z.is_real()) {
        if (sgn(f) == 0) fail(ErrorKind::IntegerPole, "pole at an integer");
        return CBall(cot_pi(Ball(f, prec)));
    }
    CBall w(ExactScalar(f, z.im()), prec);
    return cot(w * CBall(Ball::pi(prec)));
}

CBall cot_pi_ball(const CBall& z, long prec) {
    if (z.is_real_exact()) {
        const Ball& x = z.re();
        Rat lo = x.lower_rat(), hi = x.upper_rat();
        if (floor_rat(lo) != floor_rat(hi) || sgn(frac_rat(lo)) == 0)
            fail(ErrorKind::IntegerPole, "argument ball is not certified away from the integers");
        return CBall(cot_pi(x));
    }
    try {
        return cot(z * CBall(Ball::pi(prec)));
    } catch (const Error&) {
        fail(ErrorKind::IntegerPole, "argument ball is not certified away from the integers");
    }
}

// coefficients of p(b + t) in ascending powers of t
template <class P>
std::vector<CBall> taylor_at(const P& p, const CBall& b, long prec) {
    int d = p.degree();
    std::vector<CBall> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(p[static_cast<size_t>(i)], prec);
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j) c[static_cast<size_t>(j)] += b * c[static_cast<size_t>(j + 1)];
    return c;
}

template <class T>
std::vector<T> series_div(const std::vector<T>& a, const std::vector<T>& h, size_t count, const T& zero) {
    std::vector<T> e(count, zero);
    for (size_t i = 0; i < count; ++i) {
        T acc = i < a.size() ? a[i] : zero;
        for (size_t j = 1; j <= i && j < h.size(); ++j) acc -= h[j] * e[i - j];
        e[i] = acc / h[0];
    }
    return e;
}

struct IntRatio {
    std::vector<Int> a, b;  // A/B = scale * a(n)/b(n)
    Rat scale;
};

IntRatio integerize(const QPoly& A, const QPoly& B) {
    Int da = content_lcm_denominator(A), db = content_lcm_denominator(B);
    IntRatio r;
    for (const auto& c : A.coeffs()) r.a.push_back(Rat(c * Rat(da)).get_num());
    for (const auto& c : B.coeffs()) r.b.push_back(Rat(c * Rat(db)).get_num());
    r.scale = Rat(db) / Rat(da);
    r.scale.canonicalize();
    return r;
}

Int eval_int(const std::vector<Int>& p, long n) {
    Int acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * n + p[i];
    return acc;
}

void reject_integer_roots(const QPoly& B) {
    for (const auto& r : gaussian_rational_roots(B))
        if (is_int(r.value)) fail(ErrorKind::IntegerPole, "B has the integer root " + r.value.str());
}

}  // namespace

Ball SeriesValue::real() const {
    if (!value.im().contains_zero()) fail(ErrorKind::Undecided, "series value is not real");
    return value.re();
}

bool RationalSeriesSpec::all_exact() const {
    for (const auto& p : poles)
        if (!p.exact) return false;
    return true;
}

std::vector<Int> cot_derivative_coeffs(unsigned k) {
    if (k < 2) fail(ErrorKind::Precondition, "cot_derivative_coeffs needs k >= 2");
    std::vector<Int> a{Int(-1), Int(-1)};
    for (unsigned m = 2; m < k; ++m) {
        std::vector<Int> b(a.size() + 1, Int(0));
        for (size_t j = 1; j <= b.size(); ++j) {
            Int v = 0;
            if (j <= a.size()) v -= Int(static_cast<long>(j)) * a[j - 1];
            if (j >= 2) v -= Int(static_cast<long>(j - 1)) * a[j - 2];
            b[j - 1] = v;
        }
        a = std::move(b);
    }
    return a;
}

const std::vector<Int>& cot_power_poly(unsigned m) {
    static std::mutex mu;
    static std::vector<std::vector<Int>> cache{{Int(0), Int(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        const std::vector<Int>& q = cache.back();
        std::vector<Int> d;
        for (size_t i = 1; i < q.size(); ++i) d.push_back(q[i] * Int(static_cast<long>(i)));
        std::vector<Int> r(d.size() + 2, Int(0));
        for (size_t i = 0; i < d.size(); ++i) {
            r[i] -= d[i];
            r[i + 2] -= d[i];
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        cache.push_back(std::move(r));
    }
    return cache[m];
}

std::vector<Rat> cot_series_coeffs(unsigned K) {
    // w cos w = sum (-1)^m w^{2m+1}/(2m)!, sin w = sum (-1)^m w^{2m+1}/(2m+1)!; divide by w
    std::vector<Rat> num(K + 1, Rat(0)), den(K + 1, Rat(0));
    for (unsigned i = 0; i <= K; i += 2) {
        Rat s = (i / 2) % 2 ? Rat(-1) : Rat(1);
        num[i] = s / Rat(factorial(i));
        den[i] = s / Rat(factorial(i + 1));
    }
    return series_div(num, den, K + 1, Rat(0));
}

Rat zeta_even_via_cot(unsigned n) {
    std::vector<Rat> c = cot_series_coeffs(2 * n);
    Rat r = -c[2 * n] / 2;
    r.canonicalize();
    return r;
}

SeriesValue bilateral_power_sum(const ExactScalar& z, unsigned k, long prec) {
    if (k == 0) fail(ErrorKind::Precondition, "power sum needs k >= 1");
    if (is_int(z)) fail(ErrorKind::IntegerPole, "pole at an integer");
    SymbolicSum c = SymbolicSum::cot_pi(z);
    const std::vector<Int>& q = cot_power_poly(k - 1);
    SymbolicSum acc;
    for (size_t i = q.size(); i-- > 0;) acc = acc * c + SymbolicSum(ExactScalar(q[i]));
    SymbolicSum s = acc * power_sum_prefactor(k);
    SeriesValue out;
    if (s.terms().empty() || (s.terms().size() == 1 && s.terms().begin()->first.empty())) {
        out.value = CBall(s.constant(), prec);
    } else {
        long wp = prec + 32;
        out.value = power_sum_from_cot(cot_pi_exact_arg(z, wp), k, wp).with_prec(prec);
    }
    out.exact = std::move(s);
    return out;
}

SeriesValue bilateral_power_sum(const CBall& z, unsigned k, long prec) {
    if (k == 0) fail(ErrorKind::Precondition, "power sum needs k >= 1");
    long wp = prec + 32;
    SeriesValue out;
    out.value = power_sum_from_cot(cot_pi_ball(z.with_prec(std::max(z.prec(), wp)), wp), k, wp).with_prec(prec);
    return out;
}

RationalSeriesSpec make_series_spec(const QPoly& A, const QPoly& B, long prec) {
    if (B.degree() < 1) fail(ErrorKind::Precondition, "B must be nonconstant");
    RationalSeriesSpec spec{A, B, {}};
    GPoly Ag = to_gaussian(A), Bg = to_gaussian(B);
    GPoly rest;
    for (const auto& r : gaussian_rational_roots(Bg, &rest)) {
        PoleTerm t;
        t.exact = true;
        t.root = r.value;
        t.root_ball = CBall(r.value, prec);
        t.multiplicity = r.multiplicity;
        GPoly lin(std::vector<ExactScalar>{-r.value, ExactScalar(1)});
        GPoly H = Bg;
        for (unsigned j = 0; j < r.multiplicity; ++j) H = GPoly::divmod(H, lin).first;
        GPoly as = Ag.shifted(r.value), hs = H.shifted(r.value);
        std::vector<ExactScalar> e = series_div(as.coeffs(), hs.coeffs(), r.multiplicity, ExactScalar(0));
        t.coeffs.resize(r.multiplicity);
        for (unsigned i = 0; i < r.multiplicity; ++i) t.coeffs[r.multiplicity - 1 - i] = e[i];
        for (auto& c : t.coeffs) t.coeffs_ball.emplace_back(c, prec);
        spec.poles.push_back(std::move(t));
    }
    if (rest.degree() >= 1) {
        for (const auto& r : isolate_roots(rest, prec)) {
            PoleTerm t;
            t.root_ball = r.z;
            t.multiplicity = r.multiplicity;
            std::vector<CBall> bt = taylor_at(Bg, r.z, prec), at = taylor_at(Ag, r.z, prec);
            std::vector<CBall> h(bt.begin() + r.multiplicity, bt.end());
            if (h.empty() || h[0].contains_zero()) fail(ErrorKind::InsufficientPrecision, "pole Taylor coefficient not separated from 0");
            std::vector<CBall> e = series_div(at, h, r.multiplicity, CBall(prec));
            t.coeffs_ball.resize(r.multiplicity, CBall(prec));
            for (unsigned i = 0; i < r.multiplicity; ++i) t.coeffs_ball[r.multiplicity - 1 - i] = e[i];
            spec.poles.push_back(std::move(t));
        }
    }
    return spec;
}

SeriesValue bilateral_rational_sum(const QPoly& A, const QPoly& B, long prec) {
    SeriesValue out;
    if (A.is_zero()) {
        out.exact = SymbolicSum();
        out.value = CBall(prec);
        return out;
    }
    if (B.degree() <= A.degree()) fail(ErrorKind::Nonconvergent, "deg B <= deg A: the bilateral series diverges");
    long wp = prec + 64;
    RationalSeriesSpec spec = make_series_spec(A, B, wp);
    for (const auto& p : spec.poles)
        if (p.exact && is_int(p.root)) fail(ErrorKind::IntegerPole, "B has the integer root " + p.root.str());
    if (B.degree() >= A.degree() + 2 && spec.all_exact()) {
        ExactScalar res(0);
        for (const auto& p : spec.poles) res += p.coeffs[0];
        if (!res.is_zero()) fail(ErrorKind::Internal, "residues of a decaying rational function do not cancel");
    }
    CBall total(wp);
    for (const auto& p : spec.poles) {
        CBall cotv = p.exact ? cot_pi_exact_arg(-p.root, wp) : cot_pi_ball(-p.root_ball, wp);
        for (unsigned j = 1; j <= p.multiplicity; ++j)
            total += p.coeffs_ball[j - 1] * power_sum_from_cot(cotv, j, wp);
    }
    out.value = total.with_prec(prec);
    if (spec.all_exact()) {
        SymbolicSum s;
        for (const auto& p : spec.poles)
            for (unsigned j = 1; j <= p.multiplicity; ++j)
                s += bilateral_power_sum(-p.root, j, prec).exact->scaled(p.coeffs[j - 1]);
        out.exact = std::move(s);
    }
    return out;
}

namespace {

// log sin(pi k/q) for q in {3, 4, 6}, 1 <= k < q/2
SymbolicSum log_sin_exact(long k, long q) {
    SymbolicSum l2 = SymbolicSum::log(Rat(2)), l3 = SymbolicSum::log(Rat(3));
    if ((q == 3 && k == 1) || (q == 6 && k == 2)) return l3.scaled(ExactScalar(Rat(1, 2))) - l2;
    if (q == 4 && k == 1) return l2.scaled(ExactScalar(Rat(-1, 2)));
    if (q == 6 && k == 1) return l2.scaled(ExactScalar(-1));
    fail(ErrorKind::Internal, "no exact log-sine entry");
}

Rat cos_two_pi_exact(const Rat& r) {
    long n = Rat(frac_rat(r) * 12).get_num().get_si();
    switch (n) {
    case 0: return Rat(1);
    case 6: return Rat(-1);
    case 4: case 8: return Rat(-1, 2);
    case 3: case 9: return Rat(0);
    case 2: case 10: return Rat(1, 2);
    default: fail(ErrorKind::Internal, "no exact cosine entry");
    }
}

// a = f + m with f in (0, 1]
void split_arg(const Rat& a, Rat& f, long& m) {
    Rat fl = floor_rat(a);
    f = a - fl;
    if (sgn(f) == 0) {
        f = 1;
        fl -= 1;
    }
    m = fl.get_num().get_si();
}

}  // namespace

SymbolicSum digamma_exact(const Rat& a) {
    Rat f;
    long m;
    split_arg(a, f, m);
    if (m < 0 && f == 1 && sgn(a) <= 0) fail(ErrorKind::IntegerPole, "digamma pole at a nonpositive integer");
    long q = f.get_den().get_si();
    if (!(q == 1 || q == 2 || q == 3 || q == 4 || q == 6))
        fail(ErrorKind::Precondition, "no exact digamma value for denominator " + std::to_string(q));
    SymbolicSum psi = SymbolicSum::atom({SymAtom::Kind::EulerGamma, ExactScalar(0)}).scaled(ExactScalar(-1));
    if (q > 1) {
        psi -= SymbolicSum::log(Rat(2 * q));
        psi -= (SymbolicSum::pi() * SymbolicSum::cot_pi(ExactScalar(f))).scaled(ExactScalar(Rat(1, 2)));
        for (long k = 1; 2 * k < q; ++k)
            psi += log_sin_exact(k, q).scaled(ExactScalar(2 * cos_two_pi_exact(Rat(k) * f)));
    }
    Rat shift(0);
    if (m >= 0) {
        for (long i = 0; i < m; ++i) shift += Rat(1) / (f + i);
    } else {
        for (long i = m; i < 0; ++i) shift -= Rat(1) / (f + i);
    }
    return psi + SymbolicSum(ExactScalar(shift));
}

Ball digamma_ball(const Rat& a, long prec) {
    Rat f;
    long m;
    split_arg(a, f, m);
    if (m < 0 && f == 1 && sgn(a) <= 0) fail(ErrorKind::IntegerPole, "digamma pole at a nonpositive integer");
    long wp = prec + 32;
    Ball psi = -Ball::euler_gamma(wp);
    Int qz = f.get_den();
    if (qz > 1) {
        long q = qz.get_si();
        Ball pi = Ball::pi(wp);
        psi -= log(Ball(2 * q, wp));
        psi -= (pi * cot_pi(Ball(f, wp))).mul_2exp(-1);
        for (long k = 1; 2 * k < q; ++k) {
            Ball c = cos(pi.mul_2exp(1) * Ball(frac_rat(Rat(k) * f), wp));
            Ball s = sin(pi * Ball(Rat(k, q), wp));
            psi += (c * log(s)).mul_2exp(1);
        }
    }
    Rat shift(0);
    if (m >= 0) {
        for (long i = 0; i < m; ++i) shift += Rat(1) / (f + i);
    } else {
        for (long i = m; i < 0; ++i) shift -= Rat(1) / (f + i);
    }
    return (psi + Ball(shift, wp)).with_prec(prec);
}

SeriesValue unilateral_rational_sum(const QPoly& A, const QPoly& B, long prec) {
    SeriesValue out;
    if (A.is_zero()) {
        out.exact = SymbolicSum();
        out.value = CBall(prec);
        return out;
    }
    if (B.degree() < A.degree() + 2) fail(ErrorKind::Nonconvergent, "a one-sided sum needs deg B >= deg A + 2");
    GPoly rest;
    auto roots = gaussian_rational_roots(B, &rest);
    if (rest.degree() >= 1) fail(ErrorKind::Precondition, "one-sided sums need every root of B rational");
    QPoly dB = B.derivative();
    std::vector<std::pair<Rat, Rat>> terms;  // (alpha, C) for C/(n + alpha)
    Rat residue_sum(0);
    bool closed = true;
    for (const auto& r : roots) {
        if (!r.value.is_real() || r.multiplicity != 1)
            fail(ErrorKind::Precondition, "one-sided sums need simple rational roots");
        Rat beta = r.value.re();
        if (beta.get_den() == 1 && sgn(beta) >= 0) fail(ErrorKind::IntegerPole, "B vanishes at n = " + rat_str(beta));
        Rat C = A.eval(beta) / dB.eval(beta);
        residue_sum += C;
        Rat alpha = -beta;
        long q = frac_rat(alpha).get_den().get_si();
        if (!(q == 1 || q == 2 || q == 3 || q == 4 || q == 6)) closed = false;
        terms.emplace_back(alpha, C);
    }
    if (sgn(residue_sum) != 0) fail(ErrorKind::Internal, "residues of a decaying rational function do not cancel");
    long wp = prec + 32;
    Ball total(wp);
    for (auto& [alpha, C] : terms) total -= Ball(C, wp) * digamma_ball(alpha, wp);
    out.value = CBall(total.with_prec(prec));
    if (closed) {
        SymbolicSum s;
        for (auto& [alpha, C] : terms) s -= digamma_exact(alpha).scaled(ExactScalar(C));
        out.exact = std::move(s);
    }
    return out;
}

SeriesValue unilateral_quadratic_sum(const Rat& C, long prec) {
    if (sgn(C) <= 0) fail(ErrorKind::Precondition, "C must be positive");
    QPoly B(std::vector<Rat>{C * C, Rat(0), Rat(1)});
    SeriesValue bil = bilateral_rational_sum(QPoly(Rat(1)), B, prec + 8);
    Rat c0 = Rat(1) / (C * C);
    SeriesValue out;
    out.value = ((bil.value - CBall(Ball(c0, prec + 8))) * CBall(Ball(Rat(1, 2), prec + 8))).with_prec(prec);
    out.exact = (*bil.exact - SymbolicSum(ExactScalar(c0))).scaled(ExactScalar(Rat(1, 2)));
    return out;
}

ExactScalar geometric_poly_sum(const QPoly& P, const ExactScalar& z) {
    if (z.norm() >= 1) fail(ErrorKind::Divergent, "sum of z^n P(n) diverges for |z| >= 1");
    ExactScalar one_minus = ExactScalar(1) - z;
    ExactScalar total(0);
    for (int i = 0; i <= P.degree(); ++i) {
        Rat a = P[static_cast<size_t>(i)];
        if (sgn(a) == 0) continue;
        ExactScalar inner(0);
        for (int j = 0; j <= i; ++j) {
            Int s = stirling2(static_cast<unsigned>(i), static_cast<unsigned>(j));
            if (s == 0) continue;
            inner += ExactScalar(Int(s * factorial(static_cast<unsigned long>(j)))) * pow(z, static_cast<unsigned long>(j)) /
                     pow(one_minus, static_cast<unsigned long>(j + 1));
        }
        total += ExactScalar(a) * inner;
    }
    return total;
}

Rat rational_tail_bound(const QPoly& U, const QPoly& V, long N) {
    if (U.is_zero()) return Rat(0);
    int e = U.degree(), d = V.degree();
    int g = d - e;
    if (g < 2) fail(ErrorKind::Precondition, "tail bound needs a degree gap of at least 2");
    if (N < 1) fail(ErrorKind::Precondition, "tail bound needs N >= 1");
    Rat unum(0);
    for (const auto& c : U.coeffs()) unum += ::abs(c);
    Rat low = ::abs(V.lead());
    Rat n1(N + 1);
    for (int i = 0; i < d; ++i) {
        Rat pw(1);
        for (int k = i; k < d; ++k) pw /= n1;
        low -= ::abs(V[static_cast<size_t>(i)]) * pw;
    }
    if (sgn(low) <= 0) fail(ErrorKind::Precondition, "N too small for the tail bound");
    Rat nn(1);
    for (int k = 1; k < g; ++k) nn *= Rat(N);
    return unum / low / nn / Rat(g - 1);
}

Ball symmetric_partial_sum(const QPoly& A, const QPoly& B, long N, long prec) {
    reject_integer_roots(B);
    IntRatio r = integerize(A, B);
    long wp = prec + 32;
    Ball s(wp);
    for (long n = N; n >= 1; --n) {
        s += Ball(eval_int(r.a, n), wp) / Ball(eval_int(r.b, n), wp);
        s += Ball(eval_int(r.a, -n), wp) / Ball(eval_int(r.b, -n), wp);
    }
    s += Ball(eval_int(r.a, 0), wp) / Ball(eval_int(r.b, 0), wp);
    s *= Ball(r.scale, wp);
    QPoly Ar = A.reflected(), Br = B.reflected();
    QPoly U = A * Br + Ar * B, V = B * Br;
    return s.add_error(rational_tail_bound(U, V, N)).with_prec(prec);
}

Ball unilateral_partial_sum(const QPoly& A, const QPoly& B, long N, long prec) {
    for (const auto& rt : gaussian_rational_roots(B))
        if (is_int(rt.value) && sgn(rt.value.re()) >= 0) fail(ErrorKind::IntegerPole, "B vanishes at a nonnegative integer");
    IntRatio r = integerize(A, B);
    long wp = prec + 32;
    Ball s(wp);
    for (long n = N; n >= 0; --n) s += Ball(eval_int(r.a, n), wp) / Ball(eval_int(r.b, n), wp);
    s *= Ball(r.scale, wp);
    return s.add_error(rational_tail_bound(A, B, N)).with_prec(prec);
}

}  // namespace translab
