#include "translab/ering.hpp"

#include "translab/error.hpp"

#include <algorithm>
#include <cctype>

namespace translab {

MPoly::MPoly(long c) : MPoly(Int(c)) {}

MPoly::MPoly(const Int& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(unsigned k) {
    if (k == 0) fail(ErrorKind::Precondition, "variables are numbered from 1");
    MPoly p;
    Monomial m(k, 0);
    m[k - 1] = 1;
    p.terms_.emplace(std::move(m), Int(1));
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Int MPoly::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Int(0) : it->second;
}

unsigned MPoly::nvars() const {
    size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<unsigned>(n);
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

void MPoly::add_term(Monomial m, const Int& c) {
    if (c == 0) return;
    while (!m.empty() && m.back() == 0) m.pop_back();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [m1, c1] : a.terms_)
        for (const auto& [m2, c2] : b.terms_) {
            MPoly::Monomial m(std::max(m1.size(), m2.size()), 0);
            for (size_t k = 0; k < m1.size(); ++k) m[k] += m1[k];
            for (size_t k = 0; k < m2.size(); ++k) m[k] += m2[k];
            r.add_term(std::move(m), c1 * c2);
        }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CBall MPoly::eval(const std::vector<CBall>& x, long prec) const {
    if (x.size() < nvars()) fail(ErrorKind::Precondition, "evaluation point has too few coordinates");
    CBall r(prec);
    for (const auto& [m, c] : terms_) {
        CBall t(ExactScalar(c), prec);
        for (size_t k = 0; k < m.size(); ++k)
            if (m[k]) t *= pow(x[k], m[k]);
        r += t;
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (size_t k = 0; k < m.size(); ++k) {
            if (!m[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(k + 1);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        Int a = abs(c);
        std::string t;
        if (mono.empty()) t = a.get_str();
        else if (a == 1) t = mono;
        else t = a.get_str() + "*" + mono;
        if (c < 0) out += "-";
        else if (!out.empty()) out += "+";
        out += t;
    }
    return out;
}

ETowerElem::ETowerElem(const MPoly& p) {
    if (!p.is_zero()) terms_.push_back({ETowerElem(), p});
}

ETowerElem ETowerElem::from_sorted(std::vector<Term> terms) {
    ETowerElem r;
    r.terms_ = std::move(terms);
    for (const auto& t : r.terms_)
        if (!t.exponent.is_zero()) r.height_ = std::max(r.height_, 1 + t.exponent.height_);
    return r;
}

Int ETowerElem::integer_constant() const {
    if (terms_.empty() || !terms_.front().exponent.is_zero()) return 0;
    return terms_.front().coeff.constant();
}

ETowerElem ETowerElem::exp(const ETowerElem& a, BaseExp mode) {
    ETowerElem e = a;
    if (mode == BaseExp::Trivial) e = a - ETowerElem(MPoly(a.integer_constant()));
    return from_sorted({Term{e, MPoly(1)}});
}

bool ETowerElem::is_unit() const {
    if (terms_.size() != 1) return false;
    const MPoly& c = terms_.front().coeff;
    return c.is_constant() && abs(c.constant()) == 1;
}

int compare(const ETowerElem& a, const ETowerElem& b) {
    if (a.height() != b.height()) return a.height() < b.height() ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t k = 0; k < a.size(); ++k) {
        const auto& x = a.terms()[k];
        const auto& y = b.terms()[k];
        int c = compare(x.exponent, y.exponent);
        if (c != 0) return c;
        if (x.coeff < y.coeff) return -1;
        if (y.coeff < x.coeff) return 1;
    }
    return 0;
}

bool operator==(const ETowerElem& a, const ETowerElem& b) { return compare(a, b) == 0; }

ETowerElem operator+(const ETowerElem& a, const ETowerElem& b) {
    std::vector<ETowerElem::Term> out;
    size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int c = i == a.terms_.size()   ? 1
                : j == b.terms_.size() ? -1
                                       : compare(a.terms_[i].exponent, b.terms_[j].exponent);
        if (c < 0) {
            out.push_back(a.terms_[i++]);
        } else if (c > 0) {
            out.push_back(b.terms_[j++]);
        } else {
            MPoly s = a.terms_[i].coeff + b.terms_[j].coeff;
            if (!s.is_zero()) out.push_back({a.terms_[i].exponent, s});
            ++i;
            ++j;
        }
    }
    return ETowerElem::from_sorted(std::move(out));
}

ETowerElem ETowerElem::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return from_sorted(std::move(t));
}

ETowerElem operator-(const ETowerElem& a, const ETowerElem& b) { return a + (-b); }

ETowerElem operator*(const ETowerElem& a, const ETowerElem& b) {
    std::map<ETowerElem, MPoly> acc;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            ETowerElem e = x.exponent + y.exponent;
            MPoly c = x.coeff * y.coeff;
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(std::move(e), std::move(c));
            else it->second += c;
        }
    std::vector<ETowerElem::Term> out;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, c});
    return ETowerElem::from_sorted(std::move(out));
}

std::string ETowerElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string s;
        if (t.exponent.is_zero()) {
            s = t.coeff.str();
        } else {
            std::string e = "E(" + t.exponent.str() + ")";
            const MPoly& c = t.coeff;
            if (c.is_constant() && c.constant() == 1) s = e;
            else if (c.is_constant() && c.constant() == -1) s = "-" + e;
            else if (c.terms().size() == 1) s = c.str() + "*" + e;
            else s = "(" + c.str() + ")*" + e;
        }
        if (!out.empty() && s[0] != '-') out += "+";
        out += s;
    }
    return out;
}

namespace {

class RawParser {
public:
    explicit RawParser(const std::string& s) {
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    RawExpr parse() {
        if (s_.empty()) fail(ErrorKind::Parse, "empty E-ring expression");
        RawExpr e = expr();
        if (pos_ != s_.size()) error("unexpected character");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    static RawExpr node(RawExpr::Kind k, std::vector<RawExpr> kids) {
        RawExpr e;
        e.kind = k;
        e.kids = std::move(kids);
        return e;
    }
    RawExpr expr() {
        RawExpr e = term();
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            bool plus = s_[pos_++] == '+';
            e = node(plus ? RawExpr::Kind::Add : RawExpr::Kind::Sub, {std::move(e), term()});
        }
        return e;
    }
    RawExpr term() {
        RawExpr e = unary();
        while (eat('*')) e = node(RawExpr::Kind::Mul, {std::move(e), unary()});
        return e;
    }
    RawExpr unary() {
        if (eat('-')) return node(RawExpr::Kind::Neg, {unary()});
        if (eat('+')) return unary();
        RawExpr e = atom();
        if (eat('^')) {
            std::string d = digits();
            if (d.empty() || d.size() > 4) error("expected a small exponent");
            RawExpr p = node(RawExpr::Kind::Pow, {std::move(e)});
            p.index = static_cast<unsigned>(std::stoul(d));
            return p;
        }
        return e;
    }
    RawExpr atom() {
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            RawExpr e;
            e.kind = RawExpr::Kind::Int;
            e.value = Int(digits());
            return e;
        }
        if (eat('(')) {
            RawExpr e = expr();
            if (!eat(')')) error("expected ')'");
            return e;
        }
        if (eat('X')) {
            std::string d = digits();
            RawExpr e;
            e.kind = RawExpr::Kind::Var;
            e.index = d.empty() ? 1 : static_cast<unsigned>(std::stoul(d));
            if (e.index == 0) error("variables are numbered from 1");
            return e;
        }
        if (s_.compare(pos_, 4, "exp(") == 0) pos_ += 3;
        else if (!eat('E')) error("unexpected character");
        if (!eat('(')) error("expected '(' after E");
        RawExpr inner = expr();
        if (!eat(')')) error("expected ')'");
        return node(RawExpr::Kind::Exp, {std::move(inner)});
    }

    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

RawExpr parse_raw(const std::string& s) { return RawParser(s).parse(); }

ETowerElem e_normalize(const RawExpr& e, BaseExp mode) {
    switch (e.kind) {
        case RawExpr::Kind::Int: return ETowerElem(MPoly(e.value));
        case RawExpr::Kind::Var: return ETowerElem::var(e.index);
        case RawExpr::Kind::Add: return e_normalize(e.kids[0], mode) + e_normalize(e.kids[1], mode);
        case RawExpr::Kind::Sub: return e_normalize(e.kids[0], mode) - e_normalize(e.kids[1], mode);
        case RawExpr::Kind::Mul: return e_normalize(e.kids[0], mode) * e_normalize(e.kids[1], mode);
        case RawExpr::Kind::Neg: return -e_normalize(e.kids[0], mode);
        case RawExpr::Kind::Pow: {
            ETowerElem b = e_normalize(e.kids[0], mode), r(1);
            for (unsigned k = 0; k < e.index; ++k) r = r * b;
            return r;
        }
        case RawExpr::Kind::Exp: return ETowerElem::exp(e_normalize(e.kids[0], mode), mode);
    }
    fail(ErrorKind::Internal, "unknown expression node");
}

ETowerElem parse_elem(const std::string& s, BaseExp mode) { return e_normalize(parse_raw(s), mode); }

CBall gamma_eval(const ETowerElem& a, const std::vector<CBall>& point, long prec) {
    CBall r(prec);
    Mpfr limit(64);
    mpfr_set_ui_2exp(limit.get(), 1, 40, MPFR_RNDN);
    for (const auto& t : a.terms()) {
        CBall c = t.coeff.eval(point, prec);
        if (t.exponent.is_zero()) {
            r += c;
            continue;
        }
        CBall x = gamma_eval(t.exponent, point, prec);
        if (mpfr_cmp(x.re().abs_upper().get(), limit.get()) > 0 || !x.re().is_finite() || !x.im().is_finite())
            fail(ErrorKind::InsufficientPrecision, "exponent of a tower term is too large to evaluate");
        if (mpfr_cmp(x.im().rad().get(), limit.get()) > 0)
            fail(ErrorKind::InsufficientPrecision, "exponent enclosure too wide");
        r += c * exp(x);
    }
    if (!r.re().is_finite() || !r.im().is_finite())
        fail(ErrorKind::InsufficientPrecision, "tower value overflows");
    return r;
}

}  // namespace translab
