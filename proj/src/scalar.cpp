#include "translab/scalar.hpp"

#include "translab/error.hpp"

#include <cctype>
#include <ostream>

namespace translab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SingularArgument: return "singular-argument";
        case ErrorKind::IntegerPole: return "integer-pole";
        case ErrorKind::Nonconvergent: return "nonconvergent";
        case ErrorKind::Divergent: return "divergent";
        case ErrorKind::InsufficientPrecision: return "insufficient-precision";
        case ErrorKind::ZeroPolynomial: return "zero-polynomial";
        case ErrorKind::NotSimple: return "not-simple";
        case ErrorKind::HypothesisViolated: return "hypothesis-violated";
        case ErrorKind::DuplicateExponent: return "duplicate-exponent";
        case ErrorKind::ZeroOnBoundary: return "zero-on-boundary";
        case ErrorKind::AllZeroTail: return "all-zero-tail";
        case ErrorKind::Precondition: return "precondition-violated";
        case ErrorKind::Undecided: return "undecided";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

ExactScalar::ExactScalar(const Rat& re, const Rat& im) : re_(re), im_(im) {
    re_.canonicalize();
    im_.canonicalize();
    settle();
}

void ExactScalar::settle() {
    cplx_ = sgn(im_) != 0;
    if (!cplx_) im_ = 0;
}

ExactScalar ExactScalar::conj() const {
    if (!cplx_) return *this;
    return ExactScalar(re_, -im_);
}

Rat ExactScalar::norm() const {
    Rat n = re_ * re_;
    if (cplx_) n += im_ * im_;
    return n;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) fail(ErrorKind::SingularArgument, "division by exact zero");
    if (!cplx_) return ExactScalar(Rat(1) / re_);
    Rat n = norm();
    return ExactScalar(re_ / n, -im_ / n);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    re_ += o.re_;
    if (cplx_ || o.cplx_) {
        im_ += o.im_;
        settle();
    }
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    if (cplx_ || o.cplx_) {
        im_ -= o.im_;
        settle();
    }
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (!cplx_ && !o.cplx_) {
        re_ *= o.re_;
        return *this;
    }
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    settle();
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) fail(ErrorKind::SingularArgument, "division by exact zero");
    if (!cplx_ && !o.cplx_) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.re_ = -r.re_;
    r.im_ = -r.im_;
    return r;
}

bool operator<(const ExactScalar& a, const ExactScalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im() < b.im();
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) fail(ErrorKind::Parse, "empty rational");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string u) {
        if (!u.empty() && u[0] == '+') u.erase(0, 1);
        return u;
    };
    if (slash == std::string::npos) {
        if (!valid_int(t)) fail(ErrorKind::Parse, "bad rational '" + s + "'");
        return Rat(Int(strip_plus(t)));
    }
    std::string n = t.substr(0, slash), d = t.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d)) fail(ErrorKind::Parse, "bad rational '" + s + "'");
    Int den(strip_plus(d));
    if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    Rat q(Int(strip_plus(n)), den);
    q.canonicalize();
    return q;
}

// accepts "p/q", "p/q*i", "i", "-i", "a+b*i", "a-b*i"
ExactScalar ExactScalar::parse(const std::string& s0) {
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(ErrorKind::Parse, "empty scalar");
    if (s.back() != 'i') return ExactScalar(parse_rat(s));
    // split at the last +/- that is not a leading sign and not after '/'
    size_t split = std::string::npos;
    for (size_t k = s.size() - 1; k > 0; --k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            split = k;
            break;
        }
    }
    std::string re_part, im_part;
    if (split == std::string::npos) {
        im_part = s;
    } else {
        re_part = s.substr(0, split);
        im_part = s.substr(split);
    }
    im_part.pop_back();  // drop i
    if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
    Rat im;
    if (im_part.empty() || im_part == "+") im = 1;
    else if (im_part == "-") im = -1;
    else im = parse_rat(im_part);
    Rat re = re_part.empty() ? Rat(0) : parse_rat(re_part);
    return ExactScalar(re, im);
}

std::string ExactScalar::str() const {
    if (!cplx_) return rat_str(re_);
    std::string im = rat_str(abs(im_));
    std::string b = (im == "1") ? "i" : im + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + b;
    return rat_str(re_) + (sgn(im_) < 0 ? "-" : "+") + b;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

ExactScalar pow(const ExactScalar& base, unsigned long e) {
    ExactScalar r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

}  // namespace translab
