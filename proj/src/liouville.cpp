#include "translab/liouville.hpp"

#include "translab/error.hpp"

#include <algorithm>
#include <cmath>

namespace translab {

namespace {

constexpr unsigned long kMaxBits = 1ul << 28;

long fact_long(unsigned k) {
    if (k > 18) fail(ErrorKind::Precondition, "factorial index too large");
    long f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= static_cast<long>(i);
    return f;
}

Int ipow(unsigned base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

long bitlen(const Int& z) { return sgn(z) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

unsigned floor_log2(unsigned b) {
    unsigned l = 0;
    while ((2u << l) <= b) ++l;
    return l;
}

unsigned ceil_log2(unsigned b) {
    unsigned l = floor_log2(b);
    return (1u << l) == b ? l : l + 1;
}

// compares a * base^e with c, both positive
int cmp_scaled(const Int& a, long e, unsigned base, const Int& c) {
    // log2(a base^e) lies in [bits(a) - 1 + e*floor(log2 base), bits(a) + e*ceil(log2 base))
    long lo = bitlen(a) - 1 + e * static_cast<long>(floor_log2(base));
    long hi = bitlen(a) + e * static_cast<long>(ceil_log2(base));
    long cb = bitlen(c);  // log2 c in [cb - 1, cb)
    if (lo >= cb) return 1;
    if (hi <= cb - 1) return -1;
    if (static_cast<unsigned long>(e) * ceil_log2(base) > kMaxBits)
        fail(ErrorKind::InsufficientPrecision, "exact comparison too large to expand");
    Int l = a * ipow(base, static_cast<unsigned long>(e));
    return cmp(l, c) < 0 ? -1 : (cmp(l, c) > 0 ? 1 : 0);
}

}  // namespace

int compare(const BaseRational& a, const BaseRational& b) {
    if (a.base != b.base) fail(ErrorKind::Precondition, "BaseRational bases differ");
    int sa = sgn(a.mant), sb = sgn(b.mant);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    int flip = sa < 0 ? -1 : 1;
    Int ma = abs(a.mant), mb = abs(b.mant);
    int r = a.exp >= b.exp ? cmp_scaled(ma, a.exp - b.exp, a.base, mb) : -cmp_scaled(mb, b.exp - a.exp, a.base, ma);
    return flip * r;
}

Rat to_rat(const BaseRational& x) {
    unsigned long e = static_cast<unsigned long>(std::labs(x.exp));
    if (e * ceil_log2(x.base) > kMaxBits) fail(ErrorKind::InsufficientPrecision, "exponent too large to expand");
    Int p = ipow(x.base, e);
    Rat r = x.exp >= 0 ? Rat(x.mant * p) : Rat(x.mant, p);
    r.canonicalize();
    return r;
}

DigitRule DigitRule::periodic(std::vector<unsigned> pre, std::vector<unsigned> per) {
    DigitRule r;
    r.preperiod = std::move(pre);
    r.period = std::move(per);
    return r;
}

DigitRule DigitRule::generated(std::function<unsigned(unsigned long)> g, unsigned long gap) {
    DigitRule r;
    r.generator = std::move(g);
    r.nonzero_gap = gap;
    return r;
}

unsigned DigitRule::digit(unsigned long j) const {
    if (j == 0) fail(ErrorKind::Precondition, "digits are indexed from 1");
    if (generator) return generator(j);
    if (j <= preperiod.size()) return preperiod[j - 1];
    if (period.empty()) return 0;
    return period[(j - 1 - preperiod.size()) % period.size()];
}

std::string DigitRule::describe() const {
    if (generator) return "generated, nonzero within every " + std::to_string(nonzero_gap) + " indices";
    auto list = [](const std::vector<unsigned>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "preperiod [" + list(preperiod) + "] period [" + list(period) + "]";
}

LiouvilleNumber::LiouvilleNumber(unsigned base, DigitRule rule) : base_(base), rule_(std::move(rule)) {
    if (base_ < 2) fail(ErrorKind::Precondition, "base must be at least 2");
    auto in_range = [&](const std::vector<unsigned>& v) {
        for (unsigned d : v)
            if (d >= base_) fail(ErrorKind::Precondition, "digit " + std::to_string(d) + " out of range");
    };
    in_range(rule_.preperiod);
    in_range(rule_.period);
    bool infinite = false;
    if (rule_.generator) {
        infinite = rule_.nonzero_gap > 0;
        for (unsigned long j = 1; j <= 256; ++j)
            if (rule_.digit(j) >= base_) fail(ErrorKind::Precondition, "generated digit out of range");
    } else {
        for (unsigned d : rule_.period) infinite = infinite || d != 0;
    }
    if (!infinite) fail(ErrorKind::AllZeroTail, "digit rule is eventually zero, so x is rational");
}

unsigned long LiouvilleNumber::first_nonzero_after(unsigned long k) const {
    unsigned long span = rule_.generator ? rule_.nonzero_gap : rule_.preperiod.size() + rule_.period.size();
    for (unsigned long j = k + 1; j <= k + span; ++j)
        if (digit(j) != 0) return j;
    fail(ErrorKind::Internal, "nonzero-digit certificate violated after index " + std::to_string(k));
}

Int LiouvilleNumber::convergent_numerator(unsigned k) const {
    long kf = fact_long(k);
    if (static_cast<unsigned long>(kf) * ceil_log2(base_) > kMaxBits)
        fail(ErrorKind::InsufficientPrecision, "convergent too large to expand");
    Int p = 0;
    for (unsigned j = 1; j <= k; ++j) {
        unsigned d = digit(j);
        if (d) p += Int(d) * ipow(base_, static_cast<unsigned long>(kf - fact_long(j)));
    }
    return p;
}

LiouvilleCheck LiouvilleNumber::check(unsigned k) const {
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    LiouvilleCheck c;
    c.k = k;
    // x - p_k/q_k = sum_{j>k} m_j base^{-j!}
    c.witness_index = first_nonzero_after(k);
    c.positive = digit(c.witness_index) >= 1;
    // the tail is below (base-1) sum_{i >= (k+1)!} base^{-i} = base^{1-(k+1)!}, strictly since
    // (k+1)! + 1 is not a factorial
    BaseRational tail_bound = BaseRational::power(base_, 1 - fact_long(k + 1));
    BaseRational target = BaseRational::power(base_, -static_cast<long>(k) * fact_long(k));
    c.below = compare(tail_bound, target) <= 0;
    return c;
}

Ball LiouvilleNumber::value(long prec) const {
    unsigned lb = floor_log2(base_);
    unsigned J = 1;
    while (static_cast<double>(fact_long(J + 1) - 1) * lb < static_cast<double>(prec + 16)) ++J;
    Rat s(0);
    for (unsigned j = 1; j <= J; ++j)
        if (unsigned d = digit(j)) s += Rat(Int(d), ipow(base_, static_cast<unsigned long>(fact_long(j))));
    Mpfr err(64);
    mpfr_set_ui_2exp(err.get(), 1, -(fact_long(J + 1) - 1) * static_cast<long>(lb), MPFR_RNDU);
    return Ball(s, prec).add_error(err);
}

LiouvilleNumber liouville_from_digits(unsigned base, DigitRule rule, unsigned horizon) {
    LiouvilleNumber x(base, std::move(rule));
    for (unsigned k = 1; k <= horizon; ++k)
        if (!x.check(k).ok()) fail(ErrorKind::Internal, "defining inequality failed at k = " + std::to_string(k));
    return x;
}

PolyImageWitness liouville_poly_image(const LiouvilleNumber& x, const QPoly& f, unsigned k, long prec) {
    if (f.degree() < 1) fail(ErrorKind::Precondition, "f must be nonconstant");
    if (!is_integer_poly(f)) fail(ErrorKind::Precondition, "f must have integer coefficients");
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    PolyImageWitness w;
    w.k = k;
    w.r = static_cast<unsigned>(f.degree());
    w.base = x.base();
    unsigned r = w.r;

    // g_i: Taylor coefficients of g(X) = (f(X) - f(x)) / (X - x) at x
    std::vector<Ball> g;
    for (long wp = prec;; wp *= 2) {
        Ball xb = x.value(wp);
        std::vector<Ball> c;
        for (int i = 0; i <= f.degree(); ++i) c.emplace_back(f[static_cast<size_t>(i)], wp);
        for (int i = 0; i < f.degree(); ++i)
            for (int j = f.degree() - 1; j >= i; --j) c[static_cast<size_t>(j)] += xb * c[static_cast<size_t>(j + 1)];
        g.assign(c.begin() + 1, c.end());
        if (!g[0].contains_zero()) break;
        if (wp > 64 * prec) fail(ErrorKind::InsufficientPrecision, "f'(x) not separated from 0");
    }
    Rat g0 = Rat(0);
    {
        Mpfr lo = g[0].abs_lower();
        mpfr_get_q(g0.get_mpq_t(), lo.get());
    }
    std::vector<Rat> gu;
    for (const auto& b : g) {
        Rat u;
        Mpfr up = b.abs_upper();
        mpfr_get_q(u.get_mpq_t(), up.get());
        gu.push_back(u);
    }
    // halve delta until |g(x)| > sum_{i>=1} |g_i| delta^i: then g has no zero on the closed disc
    Rat delta(1);
    for (int it = 0;; ++it) {
        Rat s(0), pw(1);
        for (size_t i = 1; i < gu.size(); ++i) {
            pw *= delta;
            s += gu[i] * pw;
        }
        if (g0 > s) break;
        if (it > 400) fail(ErrorKind::InsufficientPrecision, "no root-free disc found");
        delta /= 2;
    }
    w.delta = delta;
    Rat M(0), pw(1);
    for (size_t i = 0; i < gu.size(); ++i) {
        M += gu[i] * pw;
        pw *= delta;
    }
    w.M = M;

    // minimal m > kr with 1 < delta 2^m and M 2^{kr} < 2^m
    unsigned m = k * r + 1;
    auto two = [](unsigned e) { return Rat(ipow(2, e)); };
    while (!(delta * two(m) > 1 && M * two(k * r) < two(m))) ++m;
    w.m = m;

    LiouvilleCheck lc = x.check(m);
    bool step1 = delta * two(m) > 1;
    bool step2 = M * two(k * r) < two(m);
    w.chain_ok = lc.ok() && step1 && step2;

    long mf = fact_long(m);
    w.q_exponent = static_cast<unsigned long>(mf) * r;
    if (w.q_exponent * ceil_log2(x.base()) > kMaxBits)
        fail(ErrorKind::InsufficientPrecision, "witness numerator too large to expand");
    Int p = x.convergent_numerator(m);
    // C = q^r f(p/q) = sum_j C_j p^j q^{r-j}
    Int C = 0, pj = 1;
    for (unsigned j = 0; j <= r; ++j) {
        Int term = f[j].get_num() * pj;
        if (sgn(term) != 0) C += term * ipow(x.base(), static_cast<unsigned long>(mf) * (r - j));
        pj *= p;
    }
    w.C = C;

    // |f(x) - C/q^r| is about |g(x)| * m_j base^{-j!} for the first nonzero digit past m
    double lb = std::log2(static_cast<double>(x.base()));
    double upper = static_cast<double>(w.q_exponent) * k * lb;
    double lower = static_cast<double>(fact_long(static_cast<unsigned>(std::min<unsigned long>(lc.witness_index, 18)))) * lb -
                   std::log2(std::max(g0.get_d(), 1e-300));
    double need = std::max(upper, lower) + 64;
    if (lc.witness_index <= 8 && need <= static_cast<double>(1 << 17)) {
        long wp = static_cast<long>(need) + 64;
        Ball xb = x.value(wp);
        Ball fx = eval_ball(f, xb);
        Int qr = ipow(x.base(), w.q_exponent);
        Ball diff = (fx - Ball(Rat(C, qr), wp)).abs();
        Ball lim(Rat(Int(1), ipow(x.base(), w.q_exponent * k)), wp);
        w.ball_ok = diff.positive() && certainly_lt(diff, lim);
    }
    return w;
}

SumSplit liouville_sum_split(const std::vector<std::uint8_t>& bits) {
    SumSplit s;
    size_t L = bits.size();
    s.alpha.assign(L, 0);
    s.beta.assign(L, 0);
    // j in [i!, (i+1)!) goes to alpha for odd i
    unsigned i = 1;
    unsigned long lo = 1, hi = 2;
    for (size_t j = 1; j <= L; ++j) {
        while (j >= hi) {
            ++i;
            lo = hi;
            hi = lo * (i + 1);
        }
        std::uint8_t d = bits[j - 1];
        if (d > 1) fail(ErrorKind::Precondition, "binary digits must be 0 or 1");
        (i % 2 ? s.alpha : s.beta)[j - 1] = d;
    }
    s.resums = true;
    for (size_t j = 0; j < L; ++j) s.resums = s.resums && (s.alpha[j] + s.beta[j] == bits[j]);
    for (unsigned k = 1; k <= 9; ++k) {
        unsigned long start = static_cast<unsigned long>(fact_long(2 * k));
        if (start > L) break;
        unsigned long next = static_cast<unsigned long>(fact_long(2 * k + 1));
        SplitCheck c;
        c.k = k;
        c.within_horizon = L >= next;
        if (c.within_horizon) {
            // tail of alpha past (2k)! - 1, scaled by 2^L; the unseen digits add at most 1
            Int T = 0;
            for (unsigned long j = start; j <= L; ++j)
                if (s.alpha[j - 1]) T += ipow(2, L - j);
            c.positive = sgn(T) > 0;
            c.bounded = T + 1 <= ipow(2, L + 1 - next);
        }
        s.checks.push_back(c);
    }
    return s;
}

}  // namespace translab
