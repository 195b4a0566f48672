#include "translab/ball.hpp"

#include "translab/error.hpp"

#include <algorithm>

namespace translab {

namespace {

constexpr mpfr_prec_t RP = 64;  // radius precision

long pmax(long a, long b) { return a > b ? a : b; }

Mpfr abs_up(const Mpfr& m) {
    Mpfr r(RP);
    mpfr_abs(r.get(), m.get(), MPFR_RNDU);
    return r;
}

Mpfr abs_down(const Mpfr& m) {
    Mpfr r(RP);
    mpfr_abs(r.get(), m.get(), MPFR_RNDD);
    return r;
}

Mpfr ulp_of(const Mpfr& m) {
    Mpfr u(RP);
    if (mpfr_zero_p(m.get()) || !mpfr_number_p(m.get())) return u;
    mpfr_set_ui_2exp(u.get(), 1, mpfr_get_exp(m.get()) - m.prec(), MPFR_RNDU);
    return u;
}

}  // namespace

Mpfr rad_from_rat(const Rat& q) {
    Mpfr r(RP);
    mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
    mpfr_abs(r.get(), r.get(), MPFR_RNDU);
    return r;
}

Mpfr rad_add(const Mpfr& a, const Mpfr& b) {
    Mpfr r(RP);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Mpfr rad_mul(const Mpfr& a, const Mpfr& b) {
    Mpfr r(RP);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Ball::Ball(long prec) : prec_(prec), mid_(prec), rad_(RP) {}

Ball::Ball(long v, long prec) : prec_(prec), mid_(prec), rad_(RP) {
    if (mpfr_set_si(mid_.get(), v, MPFR_RNDN) != 0) add_ulp();
}

Ball::Ball(const Rat& q, long prec) : prec_(prec), mid_(prec), rad_(RP) {
    if (mpfr_set_q(mid_.get(), q.get_mpq_t(), MPFR_RNDN) != 0) add_ulp();
}

Ball Ball::from_mid_rad(const Mpfr& mid, const Mpfr& rad, long prec) {
    Ball b(prec);
    if (mpfr_set(b.mid_.get(), mid.get(), MPFR_RNDN) != 0) b.add_ulp();
    Mpfr r = abs_up(rad);
    b.add_rad(r);
    return b;
}

Ball Ball::interval(const Rat& lo, const Rat& hi, long prec) {
    Rat m = (lo + hi) / 2;
    Ball b(m, prec);
    Rat half = ::abs(Rat(hi - lo)) / 2;
    b.add_rad(rad_from_rat(half));
    return b;
}

Ball Ball::hull(const Ball& a, const Ball& b) {
    long p = pmax(a.prec_, b.prec_);
    Mpfr lo(p + 64), hi(p + 64);
    Mpfr la = a.lower_bound(), lb = b.lower_bound();
    Mpfr ua = a.upper_bound(), ub = b.upper_bound();
    mpfr_min(lo.get(), la.get(), lb.get(), MPFR_RNDD);
    mpfr_max(hi.get(), ua.get(), ub.get(), MPFR_RNDU);
    Ball r(p);
    mpfr_add(r.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(r.mid_.get(), r.mid_.get(), 1, MPFR_RNDN);
    Mpfr d1(RP), d2(RP);
    mpfr_sub(d1.get(), r.mid_.get(), lo.get(), MPFR_RNDU);
    mpfr_sub(d2.get(), hi.get(), r.mid_.get(), MPFR_RNDU);
    mpfr_max(r.rad_.get(), d1.get(), d2.get(), MPFR_RNDU);
    return r;
}

Ball Ball::pi(long prec) {
    Ball b(prec);
    if (mpfr_const_pi(b.mid_.get(), MPFR_RNDN) != 0) b.add_ulp();
    return b;
}

Ball Ball::log2(long prec) {
    Ball b(prec);
    if (mpfr_const_log2(b.mid_.get(), MPFR_RNDN) != 0) b.add_ulp();
    return b;
}

Ball Ball::euler_gamma(long prec) {
    Ball b(prec);
    if (mpfr_const_euler(b.mid_.get(), MPFR_RNDN) != 0) b.add_ulp();
    return b;
}

Ball Ball::zeta(unsigned long n, long prec) {
    if (n < 2) fail(ErrorKind::Precondition, "zeta(n) needs n >= 2");
    Ball b(prec);
    if (mpfr_zeta_ui(b.mid_.get(), n, MPFR_RNDN) != 0) b.add_ulp();
    return b;
}

void Ball::add_ulp() {
    Mpfr u = ulp_of(mid_);
    mpfr_add(rad_.get(), rad_.get(), u.get(), MPFR_RNDU);
}

void Ball::add_rad(const Mpfr& r) { mpfr_add(rad_.get(), rad_.get(), r.get(), MPFR_RNDU); }

Ball Ball::with_prec(long prec) const {
    Ball b(prec);
    if (mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN) != 0) b.add_ulp();
    b.add_rad(rad_);
    return b;
}

Ball Ball::add_error(const Mpfr& e) const {
    Ball b = *this;
    b.add_rad(abs_up(e));
    return b;
}

Ball Ball::add_error(const Rat& e) const { return add_error(rad_from_rat(e)); }

bool Ball::is_finite() const { return mpfr_number_p(mid_.get()) && mpfr_number_p(rad_.get()); }

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }

bool Ball::positive() const {
    return is_finite() && mpfr_sgn(mid_.get()) > 0 && mpfr_cmp(mid_.get(), rad_.get()) > 0;
}

bool Ball::negative() const {
    return is_finite() && mpfr_sgn(mid_.get()) < 0 && mpfr_cmpabs(mid_.get(), rad_.get()) > 0;
}

bool Ball::nonnegative() const {
    if (!is_finite()) return false;
    return mpfr_sgn(mid_.get()) >= 0 && mpfr_cmp(mid_.get(), rad_.get()) >= 0;
}

bool Ball::contains(const Ball& o) const {
    if (!is_finite() || !o.is_finite()) return false;
    Mpfr d(RP);
    mpfr_sub(d.get(), o.mid_.get(), mid_.get(), MPFR_RNDU);
    if (mpfr_sgn(d.get()) < 0) mpfr_sub(d.get(), mid_.get(), o.mid_.get(), MPFR_RNDU);
    mpfr_add(d.get(), d.get(), o.rad_.get(), MPFR_RNDU);
    return mpfr_cmp(d.get(), rad_.get()) <= 0;
}

bool Ball::contains(const Rat& q) const {
    if (!is_finite()) return false;
    Rat m, r;
    mpfr_get_q(m.get_mpq_t(), mid_.get());
    mpfr_get_q(r.get_mpq_t(), rad_.get());
    return ::abs(Rat(q - m)) <= r;
}

bool Ball::overlaps(const Ball& o) const {
    if (!is_finite() || !o.is_finite()) return false;
    Mpfr d(RP);
    mpfr_sub(d.get(), o.mid_.get(), mid_.get(), MPFR_RNDD);
    if (mpfr_sgn(d.get()) < 0) mpfr_sub(d.get(), mid_.get(), o.mid_.get(), MPFR_RNDD);
    Mpfr s = rad_add(rad_, o.rad_);
    return mpfr_cmp(d.get(), s.get()) <= 0;
}

Mpfr Ball::abs_upper() const { return rad_add(abs_up(mid_), rad_); }

Mpfr Ball::abs_lower() const {
    Mpfr r(RP);
    mpfr_abs(r.get(), mid_.get(), MPFR_RNDD);
    mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
    return r;
}

Mpfr Ball::lower_bound() const {
    Mpfr r(prec_ + 64);
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

Mpfr Ball::upper_bound() const {
    Mpfr r(prec_ + 64);
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

Rat Ball::upper_rat() const {
    Mpfr u = upper_bound();
    Rat q;
    mpfr_get_q(q.get_mpq_t(), u.get());
    return q;
}

Rat Ball::lower_rat() const {
    Mpfr u = lower_bound();
    Rat q;
    mpfr_get_q(q.get_mpq_t(), u.get());
    return q;
}

Ball Ball::operator-() const {
    Ball b = *this;
    mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
    return b;
}

Ball& Ball::operator+=(const Ball& o) {
    long p = pmax(prec_, o.prec_);
    Mpfr m(p);
    int t = mpfr_add(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    prec_ = p;
    add_rad(o.rad_);
    if (t) add_ulp();
    return *this;
}

Ball& Ball::operator-=(const Ball& o) {
    long p = pmax(prec_, o.prec_);
    Mpfr m(p);
    int t = mpfr_sub(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    prec_ = p;
    add_rad(o.rad_);
    if (t) add_ulp();
    return *this;
}

Ball& Ball::operator*=(const Ball& o) {
    long p = pmax(prec_, o.prec_);
    Mpfr r = rad_add(rad_mul(abs_up(mid_), o.rad_), rad_mul(abs_up(o.mid_), rad_));
    r = rad_add(r, rad_mul(rad_, o.rad_));
    Mpfr m(p);
    int t = mpfr_mul(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    prec_ = p;
    rad_ = r;
    if (t) add_ulp();
    return *this;
}

Ball& Ball::operator/=(const Ball& o) {
    if (o.contains_zero()) fail(ErrorKind::Undecided, "ball division by an enclosure of zero");
    long p = pmax(prec_, o.prec_);
    Mpfr lb = o.abs_lower();
    Mpfr num = rad_add(rad_mul(rad_, abs_up(o.mid_)), rad_mul(abs_up(mid_), o.rad_));
    Mpfr den(RP);
    mpfr_mul(den.get(), lb.get(), abs_down(o.mid_).get(), MPFR_RNDD);
    Mpfr r(RP);
    if (mpfr_zero_p(num.get())) {
        mpfr_set_zero(r.get(), 1);
    } else {
        mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
    }
    Mpfr m(p);
    int t = mpfr_div(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mid_ = std::move(m);
    prec_ = p;
    rad_ = r;
    if (t) add_ulp();
    return *this;
}

Ball Ball::mul_2exp(long e) const {
    Ball b = *this;
    mpfr_mul_2si(b.mid_.get(), b.mid_.get(), e, MPFR_RNDN);
    mpfr_mul_2si(b.rad_.get(), b.rad_.get(), e, MPFR_RNDU);
    return b;
}

Ball Ball::abs() const {
    if (!contains_zero()) return mpfr_sgn(mid_.get()) < 0 ? -*this : *this;
    Mpfr half(RP);
    mpfr_div_2ui(half.get(), abs_upper().get(), 1, MPFR_RNDU);
    return Ball::from_mid_rad(half, half, prec_);
}

std::string Ball::mid_str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(prec_ * 0.30103) + 1;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits, mid_.get());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Ball::rad_str() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.6RUe", rad_.get());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Cmp compare(const Ball& a, const Ball& b) {
    Ball d = b - a;
    if (d.positive()) return Cmp::Less;
    if (d.negative()) return Cmp::Greater;
    return Cmp::Undecided;
}

bool certainly_lt(const Ball& a, const Ball& b) { return compare(a, b) == Cmp::Less; }

bool certainly_le(const Ball& a, const Ball& b) { return (b - a).nonnegative(); }

Ball sqr(const Ball& x) {
    if (!x.contains_zero()) return x * x;
    Mpfr u = x.abs_upper();
    Mpfr u2 = rad_mul(u, u);
    Mpfr half(RP);
    mpfr_div_2ui(half.get(), u2.get(), 1, MPFR_RNDU);
    Ball m = Ball::from_mid_rad(half, half, x.prec());
    return m;
}

Ball pow(const Ball& x, unsigned long n) {
    Ball r(1, x.prec()), b = x;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b = sqr(b);
    }
    return r;
}

Ball sqrt(const Ball& x) {
    long p = x.prec();
    if (x.contains_zero()) {
        Mpfr up = x.upper_bound();
        if (mpfr_sgn(up.get()) < 0) fail(ErrorKind::SingularArgument, "sqrt of a negative ball");
        Mpfr s(RP);
        mpfr_sqrt(s.get(), up.get(), MPFR_RNDU);
        Mpfr half(RP);
        mpfr_div_2ui(half.get(), s.get(), 1, MPFR_RNDU);
        return Ball::from_mid_rad(half, half, p);
    }
    if (!x.positive()) fail(ErrorKind::SingularArgument, "sqrt of a negative ball");
    Mpfr m(p);
    int t = mpfr_sqrt(m.get(), x.mid().get(), MPFR_RNDN);
    Mpfr sd(RP);
    mpfr_sqrt(sd.get(), x.mid().get(), MPFR_RNDD);
    Mpfr r(RP);
    if (!mpfr_zero_p(x.rad().get())) mpfr_div(r.get(), x.rad().get(), sd.get(), MPFR_RNDU);
    Ball b = Ball::from_mid_rad(m, r, p);
    if (t) b = b.add_error(ulp_of(m));
    return b;
}

Ball exp(const Ball& x) {
    long p = x.prec();
    Mpfr m(p);
    int t = mpfr_exp(m.get(), x.mid().get(), MPFR_RNDN);
    Mpfr r(RP);
    if (!mpfr_zero_p(x.rad().get())) {
        Mpfr eu(RP), em(RP);
        mpfr_exp(eu.get(), x.mid().get(), MPFR_RNDU);
        mpfr_expm1(em.get(), x.rad().get(), MPFR_RNDU);
        mpfr_mul(r.get(), eu.get(), em.get(), MPFR_RNDU);
    }
    Ball b = Ball::from_mid_rad(m, r, p);
    if (t) b = b.add_error(ulp_of(m));
    return b;
}

Ball log(const Ball& x) {
    if (!x.positive()) fail(ErrorKind::SingularArgument, "log of a ball not certainly positive");
    long p = x.prec();
    Mpfr m(p);
    int t = mpfr_log(m.get(), x.mid().get(), MPFR_RNDN);
    Mpfr r(RP);
    if (!mpfr_zero_p(x.rad().get())) {
        Mpfr lo = x.abs_lower();
        mpfr_div(r.get(), x.rad().get(), lo.get(), MPFR_RNDU);
    }
    Ball b = Ball::from_mid_rad(m, r, p);
    if (t) b = b.add_error(ulp_of(m));
    return b;
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
Ball lipschitz1(const Ball& x, bool bounded) {
    long p = x.prec();
    Mpfr m(p);
    int t = F(m.get(), x.mid().get(), MPFR_RNDN);
    Mpfr r = x.rad();
    if (bounded && mpfr_cmp_ui(r.get(), 2) > 0) mpfr_set_ui(r.get(), 2, MPFR_RNDU);
    Ball b = Ball::from_mid_rad(m, r, p);
    if (t) b = b.add_error(ulp_of(m));
    return b;
}

}  // namespace

Ball sin(const Ball& x) { return lipschitz1<mpfr_sin>(x, true); }
Ball cos(const Ball& x) { return lipschitz1<mpfr_cos>(x, true); }
Ball atan(const Ball& x) { return lipschitz1<mpfr_atan>(x, false); }

Ball sinh(const Ball& x) {
    Ball e = exp(x);
    return (e - inv(e)).mul_2exp(-1);
}

Ball cosh(const Ball& x) {
    Ball e = exp(x);
    return (e + inv(e)).mul_2exp(-1);
}

Ball inv(const Ball& x) { return Ball(1, x.prec()) / x; }

Ball cot_pi(const Ball& x) {
    Ball t = Ball::pi(x.prec() + 16) * x.with_prec(x.prec() + 16);
    Ball s = sin(t);
    if (s.contains_zero()) fail(ErrorKind::SingularArgument, "cot(pi x) at an enclosure of an integer");
    return (cos(t) / s).with_prec(x.prec());
}

Ball CBall::norm2() const { return sqr(re_) + sqr(im_); }

Ball CBall::abs() const {
    if (im_.is_exact() && mpfr_zero_p(im_.mid().get())) return re_.abs();
    return sqrt(norm2());
}

Mpfr CBall::abs_upper() const {
    Mpfr a = re_.abs_upper(), b = im_.abs_upper();
    Mpfr r(RP);
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

Mpfr CBall::abs_lower() const {
    Mpfr a = re_.abs_lower(), b = im_.abs_lower();
    Mpfr r(RP);
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDD);
    return r;
}

CBall& CBall::operator+=(const CBall& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

CBall& CBall::operator-=(const CBall& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

CBall& CBall::operator*=(const CBall& o) {
    Ball r = re_ * o.re_ - im_ * o.im_;
    Ball i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

CBall& CBall::operator/=(const CBall& o) {
    if (o.im_.is_exact() && mpfr_zero_p(o.im_.mid().get())) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    Ball n = o.norm2();
    if (!n.positive()) fail(ErrorKind::Undecided, "complex division by an enclosure of zero");
    Ball r = (re_ * o.re_ + im_ * o.im_) / n;
    Ball i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

CBall pow(const CBall& x, unsigned long n) {
    CBall r(Ball(1, x.prec())), b = x;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

CBall exp(const CBall& z) {
    Ball e = exp(z.re());
    if (z.im().is_exact() && mpfr_zero_p(z.im().mid().get())) return CBall(e);
    return CBall(e * cos(z.im()), e * sin(z.im()));
}

CBall sin(const CBall& z) {
    if (z.im().is_exact() && mpfr_zero_p(z.im().mid().get())) return CBall(sin(z.re()));
    return CBall(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

CBall cos(const CBall& z) {
    if (z.im().is_exact() && mpfr_zero_p(z.im().mid().get())) return CBall(cos(z.re()));
    return CBall(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

CBall cot(const CBall& z) {
    CBall s = sin(z);
    if (s.contains_zero()) fail(ErrorKind::SingularArgument, "cot at an enclosure of a pole");
    return cos(z) / s;
}

}  // namespace translab
