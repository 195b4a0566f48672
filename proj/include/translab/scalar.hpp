#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace translab {

using Int = mpz_class;
using Rat = mpq_class;

// Rational or Gaussian rational a + b*i. The imaginary part is only touched
// when the value is genuinely non-real.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : re_(v) {}
    ExactScalar(const Int& v) : re_(v) {}
    ExactScalar(const Rat& v) : re_(v) { re_.canonicalize(); }
    ExactScalar(const Rat& re, const Rat& im);

    static ExactScalar i() { return ExactScalar(Rat(0), Rat(1)); }
    static ExactScalar parse(const std::string& s);

    const Rat& re() const { return re_; }
    Rat im() const { return cplx_ ? im_ : Rat(0); }
    bool is_real() const { return !cplx_; }
    bool is_zero() const { return !cplx_ && sgn(re_) == 0; }
    bool is_integer() const { return !cplx_ && re_.get_den() == 1; }
    bool is_one() const { return !cplx_ && re_ == 1; }

    ExactScalar conj() const;
    Rat norm() const;  // a^2 + b^2
    ExactScalar inverse() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    ExactScalar operator-() const;

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im() == b.im();
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    // total order used for canonical sorting only: (re, im) lexicographic
    friend bool operator<(const ExactScalar& a, const ExactScalar& b);

    std::string str() const;

private:
    void settle();

    Rat re_{0};
    Rat im_{0};
    bool cplx_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

ExactScalar pow(const ExactScalar& base, unsigned long e);

std::string rat_str(const Rat& q);
Rat parse_rat(const std::string& s);

}  // namespace translab
