#pragma once

#include "translab/ball.hpp"
#include "translab/error.hpp"
#include "translab/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace translab {

inline bool is_zero_value(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero_value(const ExactScalar& s) { return s.is_zero(); }

// Dense univariate polynomial over an exact field, ascending coefficients.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(const T& constant) : c_{constant} { trim(); }

    static Poly monomial(const T& coef, size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = coef;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    const T& lead() const { return c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_value(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const T& s) const {
        Poly r = *this;
        for (auto& v : r.c_) v *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    T eval(const T& x) const {
        T r(0);
        for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1, T(0));
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Poly(std::move(d));
    }

    // p(x + a)
    Poly shifted(const T& a) const {
        Poly r;
        Poly lin(std::vector<T>{a, T(1)});
        for (size_t k = c_.size(); k-- > 0;) r = r * lin + Poly(c_[k]);
        return r;
    }

    // p(s x)
    Poly scaled_arg(const T& s) const {
        Poly r = *this;
        T f(1);
        for (auto& v : r.c_) {
            v *= f;
            f *= s;
        }
        r.trim();
        return r;
    }

    // p(-x)
    Poly reflected() const { return scaled_arg(T(-1)); }

    Poly monic() const {
        if (is_zero()) return *this;
        T inv = T(1) / lead();
        return scaled(inv);
    }

    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) fail(ErrorKind::Internal, "polynomial division by zero");
        Poly q, r = a;
        if (a.degree() < b.degree()) return {q, r};
        std::vector<T> qc(a.c_.size() - b.c_.size() + 1, T(0));
        T inv = T(1) / b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - b.degree());
            T f = r.lead() * inv;
            qc[shift] = f;
            for (size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] -= f * b.c_[k];
            r.c_.pop_back();
            r.trim();
        }
        q = Poly(std::move(qc));
        return {q, r};
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // Yun's algorithm: returns factors f_1, f_2, ... with p = lc * prod f_k^k,
    // each f_k monic and square-free (f_k may be 1).
    std::vector<Poly> square_free() const {
        std::vector<Poly> out;
        if (degree() < 1) return out;
        Poly f = monic();
        Poly d = f.derivative();
        Poly a = gcd(f, d);
        Poly b = divmod(f, a).first;
        Poly c = divmod(d, a).first;
        Poly e = c - b.derivative();
        while (b.degree() > 0) {
            Poly g = gcd(b, e);
            out.push_back(g);
            b = divmod(b, g).first;
            c = divmod(e, g).first;
            e = c - b.derivative();
        }
        while (!out.empty() && out.back().degree() == 0) out.pop_back();
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using QPoly = Poly<Rat>;
using GPoly = Poly<ExactScalar>;

GPoly to_gaussian(const QPoly& p);
bool is_integer_poly(const QPoly& p);
Int content_lcm_denominator(const QPoly& p);

// readable form, e.g. "x^2 - x + 1/6"
std::string poly_str(const QPoly& p, const std::string& var = "x");
std::string poly_str(const GPoly& p, const std::string& var = "x");

// Parses sums/products/powers with parentheses over one variable, e.g.
// "n^2+1", "2n-1", "(6n+1)*(6n+2)". Rational constants like 1/6 are accepted.
QPoly parse_poly(const std::string& s, const std::string& var = "n");

Ball eval_ball(const QPoly& p, const Ball& x);
CBall eval_cball(const QPoly& p, const CBall& z);
CBall eval_cball(const GPoly& p, const CBall& z);

}  // namespace translab
