#include "translab/poly.hpp"

#include <cctype>

namespace translab {

GPoly to_gaussian(const QPoly& p) {
    std::vector<ExactScalar> c;
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return GPoly(std::move(c));
}

bool is_integer_poly(const QPoly& p) {
    for (const auto& v : p.coeffs())
        if (v.get_den() != 1) return false;
    return true;
}

Int content_lcm_denominator(const QPoly& p) {
    Int l = 1;
    for (const auto& v : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

namespace {

template <class T, class Abs, class Str>
std::string generic_str(const Poly<T>& p, const std::string& var, Abs neg_of, Str str_of) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        T c = p[static_cast<size_t>(k)];
        if (is_zero_value(c)) continue;
        bool negative = neg_of(c);
        T mag = negative ? T(-c) : c;
        std::string cs = str_of(mag);
        bool one = (cs == "1");
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        if (k == 0) {
            out += cs;
        } else {
            if (!one) out += (cs.find_first_of("+-") != std::string::npos ? "(" + cs + ")" : cs) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

std::string poly_str(const QPoly& p, const std::string& var) {
    return generic_str(p, var, [](const Rat& q) { return sgn(q) < 0; }, [](const Rat& q) { return rat_str(q); });
}

std::string poly_str(const GPoly& p, const std::string& var) {
    return generic_str(
        p, var, [](const ExactScalar& s) { return s.is_real() && sgn(s.re()) < 0; },
        [](const ExactScalar& s) { return s.str(); });
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& s, const std::string& var) : s_(s), var_(var) {}

    QPoly run() {
        QPoly p = sum();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    [[noreturn]] void error(const std::string& m) {
        fail(ErrorKind::Parse, "polynomial '" + s_ + "': " + m);
    }

    QPoly sum() {
        QPoly acc;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                sign = -1;
            } else if (!first) {
                break;
            }
            QPoly t = product();
            acc += sign > 0 ? t : -t;
            first = false;
            skip();
            if (!peek('+') && !peek('-')) break;
        }
        return acc;
    }

    QPoly product() {
        QPoly acc = power();
        for (;;) {
            skip();
            if (peek('*')) {
                ++pos_;
                acc *= power();
            } else if (peek('/')) {
                ++pos_;
                QPoly d = power();
                if (d.degree() != 0) error("division only by nonzero constants");
                acc = acc.scaled(Rat(1) / d[0]);
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || starts_var())) {
                acc *= power();  // implicit multiplication: 2n, (n+1)(n+2)
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_var() { return s_.compare(pos_, var_.size(), var_) == 0; }

    QPoly power() {
        QPoly base = atom();
        skip();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("exponent must be a nonnegative integer");
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            if (e > 4096) error("exponent too large");
            QPoly r(Rat(1));
            for (unsigned long k = 0; k < e; ++k) r *= base;
            return r;
        }
        return base;
    }

    QPoly atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly p = sum();
            if (!peek(')')) error("missing ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return QPoly(Rat(Int(s_.substr(start, pos_ - start))));
        }
        if (starts_var()) {
            pos_ += var_.size();
            return QPoly::x();
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::string var_;
    size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(const std::string& s, const std::string& var) { return PolyParser(s, var).run(); }

Ball eval_ball(const QPoly& p, const Ball& x) {
    Ball r(x.prec());
    for (size_t k = p.coeffs().size(); k-- > 0;) r = r * x + Ball(p.coeffs()[k], x.prec());
    return r;
}

CBall eval_cball(const QPoly& p, const CBall& z) {
    CBall r(z.prec());
    for (size_t k = p.coeffs().size(); k-- > 0;) r = r * z + CBall(Ball(p.coeffs()[k], z.prec()));
    return r;
}

CBall eval_cball(const GPoly& p, const CBall& z) {
    CBall r(z.prec());
    for (size_t k = p.coeffs().size(); k-- > 0;) r = r * z + CBall(p.coeffs()[k], z.prec());
    return r;
}

}  // namespace translab
