#include "translab/closedform.hpp"

#include "translab/error.hpp"

#include <cctype>

namespace translab {

using K = ClosedForm::Kind;

ClosedForm ClosedForm::make(Kind k, ExactScalar v, long e, std::vector<ClosedForm> kids) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->value = std::move(v);
    n->exponent = e;
    n->kids = std::move(kids);
    return ClosedForm(std::shared_ptr<const Node>(std::move(n)));
}

ClosedForm::ClosedForm(const ExactScalar& c) : ClosedForm(make(Kind::Const, c, 0, {})) {}

ClosedForm ClosedForm::pi() { return make(Kind::Pi, ExactScalar(0), 0, {}); }
ClosedForm ClosedForm::euler_gamma() { return make(Kind::EulerGamma, ExactScalar(0), 0, {}); }

ClosedForm ClosedForm::sqrt(const Int& k) {
    if (sgn(k) <= 0) fail(ErrorKind::SingularArgument, "sqrt of a nonpositive integer");
    return make(Kind::Sqrt, ExactScalar(k), 0, {});
}

ClosedForm ClosedForm::exp(const ClosedForm& arg) { return make(Kind::Exp, ExactScalar(0), 0, {arg}); }
ClosedForm ClosedForm::log(const ClosedForm& arg) { return make(Kind::Log, ExactScalar(0), 0, {arg}); }
ClosedForm ClosedForm::cot_pi(const ExactScalar& arg) { return make(Kind::Cot, arg, 0, {}); }
ClosedForm ClosedForm::coth_pi(const ExactScalar& arg) { return make(Kind::Coth, arg, 0, {}); }

ClosedForm ClosedForm::sum(std::vector<ClosedForm> terms) {
    if (terms.empty()) return ClosedForm(0);
    return make(Kind::Sum, ExactScalar(0), 0, std::move(terms));
}

ClosedForm ClosedForm::neg(const ClosedForm& x) { return make(Kind::Neg, ExactScalar(0), 0, {x}); }
ClosedForm ClosedForm::product(const ClosedForm& a, const ClosedForm& b) {
    return make(Kind::Product, ExactScalar(0), 0, {a, b});
}
ClosedForm ClosedForm::quotient(const ClosedForm& a, const ClosedForm& b) {
    return make(Kind::Quotient, ExactScalar(0), 0, {a, b});
}
ClosedForm ClosedForm::power(const ClosedForm& base, long e) { return make(Kind::Power, ExactScalar(0), e, {base}); }

bool ClosedForm::is_atom() const {
    switch (kind()) {
    case Kind::Const: {
        const ExactScalar& v = value();
        if (v.is_integer()) return sgn(v.re()) >= 0;
        return v == ExactScalar::i();
    }
    case Kind::Pi:
    case Kind::EulerGamma:
    case Kind::Sqrt:
    case Kind::Exp:
    case Kind::Log:
    case Kind::Cot:
    case Kind::Coth:
    case Kind::Power:
        return true;
    default:
        return false;
    }
}

std::string ClosedForm::operand_str() const { return is_atom() ? str() : "(" + str() + ")"; }

std::string ClosedForm::str() const {
    switch (kind()) {
    case Kind::Const:
        return value().str();
    case Kind::Pi:
        return "pi";
    case Kind::EulerGamma:
        return "gamma";
    case Kind::Sqrt:
        return "sqrt(" + value().str() + ")";
    case Kind::Exp:
        return "exp(" + kids()[0].str() + ")";
    case Kind::Log:
        return "log(" + kids()[0].str() + ")";
    case Kind::Cot:
        return "cot(pi*" + ClosedForm(value()).operand_str() + ")";
    case Kind::Coth:
        return "coth(pi*" + ClosedForm(value()).operand_str() + ")";
    case Kind::Sum: {
        std::string s;
        bool first = true;
        for (const auto& t : kids()) {
            if (t.kind() == Kind::Neg) {
                s += "-" + t.kids()[0].operand_str();
            } else {
                if (!first) s += "+";
                s += t.operand_str();
            }
            first = false;
        }
        return s;
    }
    case Kind::Neg:
        return "-" + kids()[0].operand_str();
    case Kind::Product:
        return kids()[0].operand_str() + "*" + kids()[1].operand_str();
    case Kind::Quotient:
        return kids()[0].operand_str() + "/" + kids()[1].operand_str();
    case Kind::Power: {
        std::string e = exponent() < 0 ? "(" + std::to_string(exponent()) + ")" : std::to_string(exponent());
        return kids()[0].operand_str() + "^" + e;
    }
    }
    return "?";
}

bool operator==(const ClosedForm& a, const ClosedForm& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.value() != b.value() || a.exponent() != b.exponent()) return false;
    if (a.kids().size() != b.kids().size()) return false;
    for (size_t k = 0; k < a.kids().size(); ++k)
        if (a.kids()[k] != b.kids()[k]) return false;
    return true;
}

// ---------------------------------------------------------------- parser

namespace {

class CfParser {
public:
    explicit CfParser(const std::string& s) : s_(s) {}

    ClosedForm run() {
        ClosedForm e = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return e;
    }

private:
    [[noreturn]] void error(const std::string& what) {
        fail(ErrorKind::Parse, "closed form: " + what + " at offset " + std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok)) error("expected '" + tok + "'");
    }

    static bool is_constant_term(const ClosedForm& t) {
        if (t.is_const()) return true;
        return t.kind() == K::Neg && t.kids()[0].is_const();
    }
    static ExactScalar const_value(const ClosedForm& t) {
        return t.is_const() ? t.value() : -t.kids()[0].value();
    }

    ClosedForm expr() {
        std::vector<ClosedForm> terms;
        skip();
        bool lead_neg = eat("-");
        ClosedForm t = term();
        terms.push_back(lead_neg ? ClosedForm::neg(t) : t);
        for (;;) {
            if (eat("+")) {
                terms.push_back(term());
            } else if (eat("-")) {
                terms.push_back(ClosedForm::neg(term()));
            } else {
                break;
            }
        }
        bool all_const = true;
        for (auto& x : terms) all_const = all_const && is_constant_term(x);
        if (all_const) {
            ExactScalar v(0);
            for (auto& x : terms) v += const_value(x);
            return ClosedForm(v);
        }
        if (terms.size() == 1 && !lead_neg) return terms[0];
        return ClosedForm::sum(std::move(terms));
    }

    ClosedForm term() {
        ClosedForm a = factor();
        for (;;) {
            if (eat("*")) {
                ClosedForm b = factor();
                if (a.is_const() && b.is_const())
                    a = ClosedForm(a.value() * b.value());
                else
                    a = ClosedForm::product(a, b);
            } else if (eat("/")) {
                ClosedForm b = factor();
                if (a.is_const() && b.is_const()) {
                    if (b.value().is_zero()) error("division by zero");
                    a = ClosedForm(a.value() / b.value());
                } else {
                    a = ClosedForm::quotient(a, b);
                }
            } else {
                return a;
            }
        }
    }

    long int_literal() {
        skip();
        bool neg = false;
        if (eat("(")) {
            neg = eat("-");
            long v = int_literal();
            expect(")");
            return neg ? -v : v;
        }
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected integer exponent");
        return std::stol(s_.substr(start, pos_ - start));
    }

    ClosedForm factor() {
        ClosedForm base = primary();
        if (eat("^")) {
            long e = int_literal();
            if (base.is_const()) {
                ExactScalar v = base.value();
                if (e < 0) {
                    if (v.is_zero()) error("zero to a negative power");
                    v = v.inverse();
                }
                return ClosedForm(pow(v, static_cast<unsigned long>(e < 0 ? -e : e)));
            }
            return ClosedForm::power(base, e);
        }
        return base;
    }

    ExactScalar const_operand() {
        ClosedForm a = factor();
        if (!a.is_const()) error("expected an exact constant");
        return a.value();
    }

    ClosedForm primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ClosedForm(ExactScalar(Int(s_.substr(start, pos_ - start))));
        }
        if (eat("(")) {
            ClosedForm e = expr();
            expect(")");
            return e;
        }
        if (eat("cot(pi*")) {
            ExactScalar a = const_operand();
            expect(")");
            return ClosedForm::cot_pi(a);
        }
        if (eat("coth(pi*")) {
            ExactScalar a = const_operand();
            expect(")");
            return ClosedForm::coth_pi(a);
        }
        if (eat("sqrt(")) {
            ExactScalar a = const_operand();
            expect(")");
            if (!a.is_integer()) error("sqrt needs a positive integer");
            return ClosedForm::sqrt(a.re().get_num());
        }
        if (eat("exp(")) {
            ClosedForm a = expr();
            expect(")");
            return ClosedForm::exp(a);
        }
        if (eat("log(")) {
            ClosedForm a = expr();
            expect(")");
            return ClosedForm::log(a);
        }
        if (eat("pi")) return ClosedForm::pi();
        if (eat("gamma")) return ClosedForm::euler_gamma();
        if (eat("i")) return ClosedForm(ExactScalar::i());
        error("unexpected character");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

ClosedForm ClosedForm::parse(const std::string& s) { return CfParser(s).run(); }

// ---------------------------------------------------------------- enclosure

namespace {

Rat frac_part(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(fl);
}

Ball coth_real(const Ball& x) {
    // coth x = 1 + 2/(e^{2x} - 1), stable for x > 0 and x < 0
    if (x.contains_zero()) fail(ErrorKind::SingularArgument, "coth at zero");
    Ball t = exp(x.mul_2exp(1)) - Ball(1, x.prec());
    return Ball(1, x.prec()) + Ball(2, x.prec()) / t;
}

CBall eval(const ClosedForm& e, long prec) {
    switch (e.kind()) {
    case K::Const:
        return CBall(e.value(), prec);
    case K::Pi:
        return CBall(Ball::pi(prec));
    case K::EulerGamma:
        return CBall(Ball::euler_gamma(prec));
    case K::Sqrt:
        return CBall(sqrt(Ball(e.value().re(), prec)));
    case K::Exp:
        return exp(eval(e.kids()[0], prec));
    case K::Log: {
        const ClosedForm& a = e.kids()[0];
        if (a.is_const()) {
            if (!a.value().is_real() || sgn(a.value().re()) <= 0)
                fail(ErrorKind::SingularArgument, "log of a nonpositive argument");
            return CBall(log(Ball(a.value().re(), prec)));
        }
        CBall v = eval(a, prec);
        if (!v.im().contains_zero() || !v.re().positive())
            fail(ErrorKind::SingularArgument, "log argument not certified positive real");
        return CBall(log(v.re()));
    }
    case K::Cot: {
        const ExactScalar& a = e.value();
        if (a.is_real()) {
            Rat f = frac_part(a.re());
            if (sgn(f) == 0) fail(ErrorKind::SingularArgument, "cot(pi*n) with integer n");
            return CBall(cot_pi(Ball(f, prec)));
        }
        CBall z(ExactScalar(frac_part(a.re()), a.im()), prec);
        return cot(z * CBall(Ball::pi(prec)));
    }
    case K::Coth: {
        const ExactScalar& a = e.value();
        if (a.is_zero()) fail(ErrorKind::SingularArgument, "coth(pi*0)");
        if (a.is_real()) return CBall(coth_real(Ball(a.re(), prec) * Ball::pi(prec)));
        // coth w = i cot(i w)
        if (sgn(a.re()) == 0 && frac_part(a.im()) == 0) fail(ErrorKind::SingularArgument, "coth at a pole");
        CBall w = CBall(a, prec) * CBall(Ball::pi(prec));
        return cot(w.mul_i()).mul_i();
    }
    case K::Sum: {
        CBall s(prec);
        for (const auto& t : e.kids()) s += eval(t, prec);
        return s;
    }
    case K::Neg:
        return -eval(e.kids()[0], prec);
    case K::Product:
        return eval(e.kids()[0], prec) * eval(e.kids()[1], prec);
    case K::Quotient: {
        CBall d = eval(e.kids()[1], prec);
        if (d.contains_zero()) fail(ErrorKind::Undecided, "denominator enclosure contains zero");
        return eval(e.kids()[0], prec) / d;
    }
    case K::Power: {
        CBall b = eval(e.kids()[0], prec);
        long n = e.exponent();
        if (n >= 0) return pow(b, static_cast<unsigned long>(n));
        if (b.contains_zero()) fail(ErrorKind::Undecided, "negative power of a ball containing zero");
        return CBall(Ball(1, prec)) / pow(b, static_cast<unsigned long>(-n));
    }
    }
    fail(ErrorKind::Internal, "unknown closed-form node");
}

}  // namespace

CBall enclose_complex(const ClosedForm& expr, long prec) { return eval(expr, prec); }

Ball enclose(const ClosedForm& expr, long prec) {
    CBall v = eval(expr, prec);
    if (!v.im().contains_zero()) fail(ErrorKind::Precondition, "closed form is not real: " + expr.str());
    return v.re();
}

// ---------------------------------------------------------------- symbolic sums

namespace {

// k = s^2 * f with f squarefree; trial division is enough for the radicands we meet
void square_split(const Int& k, Int& s, Int& f) {
    s = 1;
    f = 1;
    Int n = k;
    for (unsigned long p = 2; Int(p) * p <= n; ++p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        for (unsigned j = 0; j < e / 2; ++j) s *= p;
        if (e % 2) f *= p;
        if (p > 1000000) break;
    }
    f *= n;
}

// prime factorization by trial division; a large cofactor is kept as one factor
std::vector<std::pair<Int, long>> factor_small(Int n) {
    std::vector<std::pair<Int, long>> out;
    for (unsigned long p = 2; Int(p) * p <= n && p <= 1000000; ++p) {
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(Int(p), e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Rat rat_gcd(const Rat& a, const Rat& b) {
    Int num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool leading_negative(const ExactScalar& c) {
    if (sgn(c.re()) != 0) return sgn(c.re()) < 0;
    return sgn(c.im()) < 0;
}

ClosedForm atom_tree(const SymAtom& a, long power) {
    ClosedForm base;
    switch (a.kind) {
    case SymAtom::Kind::Log:
        base = ClosedForm::log(ClosedForm(a.arg));
        break;
    case SymAtom::Kind::Sqrt:
        base = ClosedForm::sqrt(a.arg.re().get_num());
        break;
    case SymAtom::Kind::Pi:
        base = ClosedForm::pi();
        break;
    case SymAtom::Kind::EulerGamma:
        base = ClosedForm::euler_gamma();
        break;
    case SymAtom::Kind::Cot:
        base = ClosedForm::cot_pi(a.arg);
        break;
    case SymAtom::Kind::Coth:
        base = ClosedForm::coth_pi(a.arg);
        break;
    }
    return power == 1 ? base : ClosedForm::power(base, power);
}

ClosedForm term_tree(const Monomial& m, const ExactScalar& c) {
    std::vector<ClosedForm> chain;
    if (!c.is_one() || m.empty()) chain.emplace_back(c);
    for (const auto& [a, p] : m) chain.push_back(atom_tree(a, p));
    ClosedForm t = chain[0];
    for (size_t k = 1; k < chain.size(); ++k) t = ClosedForm::product(t, chain[k]);
    return t;
}

}  // namespace

SymbolicSum::SymbolicSum(const ExactScalar& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

SymbolicSum SymbolicSum::atom(SymAtom a, long power) {
    SymbolicSum s;
    s.add_term(Monomial{{a, power}}, ExactScalar(1));
    return s;
}

SymbolicSum SymbolicSum::log(const Rat& q) {
    if (sgn(q) <= 0) fail(ErrorKind::SingularArgument, "log of a nonpositive rational");
    SymbolicSum s;
    for (auto& [p, e] : factor_small(q.get_num()))
        s += atom({SymAtom::Kind::Log, ExactScalar(p)}).scaled(ExactScalar(e));
    for (auto& [p, e] : factor_small(q.get_den()))
        s -= atom({SymAtom::Kind::Log, ExactScalar(p)}).scaled(ExactScalar(e));
    return s;
}

SymbolicSum SymbolicSum::sqrt(const Int& k) {
    if (sgn(k) <= 0) fail(ErrorKind::SingularArgument, "sqrt of a nonpositive integer");
    Int s, f;
    square_split(k, s, f);
    if (f == 1) return SymbolicSum(ExactScalar(s));
    return atom({SymAtom::Kind::Sqrt, ExactScalar(f)}).scaled(ExactScalar(s));
}

SymbolicSum SymbolicSum::cot_pi(const ExactScalar& arg) {
    Rat f = frac_part(arg.re());
    if (!arg.is_real()) {
        Rat c = arg.im();
        if (sgn(f) == 0) {
            // cot(pi*i*C) = -i*coth(pi*C), coth odd
            ExactScalar coef = sgn(c) > 0 ? -ExactScalar::i() : ExactScalar::i();
            return atom({SymAtom::Kind::Coth, ExactScalar(::abs(c))}).scaled(coef);
        }
        return atom({SymAtom::Kind::Cot, ExactScalar(f, c)});
    }
    if (sgn(f) == 0) fail(ErrorKind::SingularArgument, "cot(pi*n) with integer n");
    if (mpz_divisible_p(Int(12).get_mpz_t(), f.get_den_mpz_t())) {
        long n = Rat(f * 12).get_num().get_si();  // f = n/12
        SymbolicSum r3 = sqrt(Int(3));
        switch (n) {
        case 6: return SymbolicSum();
        case 3: return SymbolicSum(ExactScalar(1));
        case 9: return SymbolicSum(ExactScalar(-1));
        case 4: return r3.scaled(ExactScalar(Rat(1, 3)));
        case 8: return r3.scaled(ExactScalar(Rat(-1, 3)));
        case 2: return r3;
        case 10: return r3.scaled(ExactScalar(-1));
        case 1: return SymbolicSum(ExactScalar(2)) + r3;
        case 5: return SymbolicSum(ExactScalar(2)) - r3;
        case 7: return r3 - SymbolicSum(ExactScalar(2));
        case 11: return SymbolicSum(ExactScalar(-2)) - r3;
        default: break;
        }
    }
    return atom({SymAtom::Kind::Cot, ExactScalar(f)});
}

void SymbolicSum::add_term(Monomial m, const ExactScalar& c0) {
    if (c0.is_zero()) return;
    ExactScalar c = c0;
    // merge square roots into one squarefree radicand
    Int radicand = 1;
    for (auto it = m.begin(); it != m.end();) {
        if (it->first.kind == SymAtom::Kind::Sqrt) {
            if (it->second < 0) fail(ErrorKind::Internal, "negative power of sqrt atom");
            for (long j = 0; j < it->second; ++j) radicand *= it->first.arg.re().get_num();
            it = m.erase(it);
        } else if (it->second == 0) {
            it = m.erase(it);
        } else {
            ++it;
        }
    }
    if (radicand != 1) {
        Int s, f;
        square_split(radicand, s, f);
        c *= ExactScalar(s);
        if (f != 1) m[SymAtom{SymAtom::Kind::Sqrt, ExactScalar(f)}] = 1;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolicSum& SymbolicSum::operator+=(const SymbolicSum& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolicSum& SymbolicSum::operator-=(const SymbolicSum& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymbolicSum& SymbolicSum::operator*=(const SymbolicSum& o) {
    SymbolicSum r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (const auto& [a, p] : m2) m[a] += p;
            r.add_term(std::move(m), c1 * c2);
        }
    }
    *this = std::move(r);
    return *this;
}

SymbolicSum SymbolicSum::scaled(const ExactScalar& c) const {
    SymbolicSum r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

SymbolicSum SymbolicSum::pow(unsigned long e) const {
    SymbolicSum r(ExactScalar(1)), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool SymbolicSum::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_real();
}

ExactScalar SymbolicSum::constant() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

ClosedForm SymbolicSum::to_closed_form() const {
    if (terms_.empty()) return ClosedForm(0);
    // canonical order: non-constant monomials by atom order, the constant last
    std::vector<std::pair<const Monomial*, ExactScalar>> ts;
    for (const auto& [m, c] : terms_)
        if (!m.empty()) ts.emplace_back(&m, c);
    for (const auto& [m, c] : terms_)
        if (m.empty()) ts.emplace_back(&m, c);

    if (ts.size() == 1 && ts[0].first->empty()) return ClosedForm(ts[0].second);

    Rat content(0);
    for (auto& [m, c] : ts) {
        if (sgn(c.re()) != 0) content = sgn(content) == 0 ? ::abs(c.re()) : rat_gcd(content, ::abs(c.re()));
        Rat im = c.im();
        if (sgn(im) != 0) content = sgn(content) == 0 ? ::abs(im) : rat_gcd(content, ::abs(im));
    }
    if (leading_negative(ts[0].second)) content = -content;

    std::vector<ClosedForm> parts;
    for (auto& [m, c] : ts) {
        ExactScalar g = c / ExactScalar(content);
        if (ts.size() > 1 && leading_negative(g))
            parts.push_back(ClosedForm::neg(term_tree(*m, -g)));
        else
            parts.push_back(term_tree(*m, g));
    }
    ClosedForm body = parts.size() == 1 ? parts[0] : ClosedForm::sum(std::move(parts));
    if (content == 1) return body;
    return ClosedForm::product(ClosedForm(ExactScalar(content)), body);
}

}  // namespace translab
