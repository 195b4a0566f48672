#pragma once

#include "translab/scalar.hpp"

#include <mpfr.h>

#include <string>

namespace translab {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

enum class Cmp { Less, Greater, Undecided };

// Real mid-radius enclosure. Every operation rounds the midpoint to nearest
// and adds one ulp of the result to the radius (plus the propagated radius).
class Ball {
public:
    explicit Ball(long prec = 256);
    Ball(long v, long prec);
    Ball(const Rat& q, long prec);
    Ball(const Int& z, long prec) : Ball(Rat(z), prec) {}

    static Ball from_mid_rad(const Mpfr& mid, const Mpfr& rad, long prec);
    // smallest convenient ball containing [lo, hi]
    static Ball hull(const Ball& a, const Ball& b);
    static Ball interval(const Rat& lo, const Rat& hi, long prec);

    static Ball pi(long prec);
    static Ball log2(long prec);
    static Ball zeta(unsigned long n, long prec);  // n >= 2
    static Ball euler_gamma(long prec);

    long prec() const { return prec_; }
    const Mpfr& mid() const { return mid_; }
    const Mpfr& rad() const { return rad_; }
    double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
    double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

    Ball with_prec(long prec) const;
    Ball add_error(const Mpfr& e) const;  // widen radius by e >= 0
    Ball add_error(const Rat& e) const;

    bool is_exact() const { return mpfr_zero_p(rad_.get()); }
    bool is_finite() const;
    bool contains_zero() const;
    bool positive() const;  // certainly > 0
    bool negative() const;
    bool nonnegative() const;
    bool contains(const Ball& o) const;
    bool contains(const Rat& q) const;
    bool overlaps(const Ball& o) const;

    // |x| <= upper for every x in the ball; lower <= |x|
    Mpfr abs_upper() const;
    Mpfr abs_lower() const;
    Mpfr lower_bound() const;  // exact mpfr value <= every point
    Mpfr upper_bound() const;
    Rat upper_rat() const;
    Rat lower_rat() const;

    Ball operator-() const;
    Ball& operator+=(const Ball& o);
    Ball& operator-=(const Ball& o);
    Ball& operator*=(const Ball& o);
    Ball& operator/=(const Ball& o);
    friend Ball operator+(Ball a, const Ball& b) { return a += b; }
    friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
    friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
    friend Ball operator/(Ball a, const Ball& b) { return a /= b; }

    Ball mul_2exp(long e) const;  // exact scaling by 2^e
    Ball abs() const;

    std::string mid_str(int digits = 0) const;  // digits = 0 -> enough for prec
    std::string rad_str() const;

private:
    void add_ulp();       // rad += ulp(mid)
    void add_rad(const Mpfr& r);

    long prec_;
    Mpfr mid_;
    Mpfr rad_;
};

Cmp compare(const Ball& a, const Ball& b);
bool certainly_lt(const Ball& a, const Ball& b);
bool certainly_le(const Ball& a, const Ball& b);

Ball sqr(const Ball& x);
Ball pow(const Ball& x, unsigned long n);
Ball sqrt(const Ball& x);
Ball exp(const Ball& x);
Ball log(const Ball& x);
Ball sin(const Ball& x);
Ball cos(const Ball& x);
Ball atan(const Ball& x);
Ball sinh(const Ball& x);
Ball cosh(const Ball& x);
Ball cot_pi(const Ball& x);  // cot(pi x), certified reduction mod 1
Ball inv(const Ball& x);

// radius helpers, all rounding up
Mpfr rad_from_rat(const Rat& q);
Mpfr rad_add(const Mpfr& a, const Mpfr& b);
Mpfr rad_mul(const Mpfr& a, const Mpfr& b);

class CBall {
public:
    explicit CBall(long prec = 256) : re_(prec), im_(prec) {}
    CBall(const Ball& re) : re_(re), im_(re.prec()) {}
    CBall(const Ball& re, const Ball& im) : re_(re), im_(im) {}
    CBall(const ExactScalar& s, long prec) : re_(s.re(), prec), im_(s.im(), prec) {}

    static CBall i(long prec) { return CBall(Ball(prec), Ball(1, prec)); }

    const Ball& re() const { return re_; }
    const Ball& im() const { return im_; }
    long prec() const { return re_.prec() > im_.prec() ? re_.prec() : im_.prec(); }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool excludes_zero() const { return !contains_zero(); }
    bool contains(const CBall& o) const { return re_.contains(o.re_) && im_.contains(o.im_); }
    bool contains(const ExactScalar& s) const { return re_.contains(s.re()) && im_.contains(s.im()); }
    bool overlaps(const CBall& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }
    bool is_real_exact() const { return im_.is_exact() && mpfr_zero_p(im_.mid().get()); }

    CBall conj() const { return CBall(re_, -im_); }
    Ball norm2() const;
    Ball abs() const;
    Mpfr abs_upper() const;
    Mpfr abs_lower() const;
    CBall with_prec(long p) const { return CBall(re_.with_prec(p), im_.with_prec(p)); }
    CBall add_error(const Mpfr& e) const { return CBall(re_.add_error(e), im_.add_error(e)); }
    CBall mul_i() const { return CBall(-im_, re_); }

    CBall operator-() const { return CBall(-re_, -im_); }
    CBall& operator+=(const CBall& o);
    CBall& operator-=(const CBall& o);
    CBall& operator*=(const CBall& o);
    CBall& operator/=(const CBall& o);
    friend CBall operator+(CBall a, const CBall& b) { return a += b; }
    friend CBall operator-(CBall a, const CBall& b) { return a -= b; }
    friend CBall operator*(CBall a, const CBall& b) { return a *= b; }
    friend CBall operator/(CBall a, const CBall& b) { return a /= b; }

private:
    Ball re_, im_;
};

CBall pow(const CBall& x, unsigned long n);
CBall exp(const CBall& z);
CBall sin(const CBall& z);
CBall cos(const CBall& z);
CBall cot(const CBall& z);

}  // namespace translab
