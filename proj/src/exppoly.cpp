#include "translab/exppoly.hpp"

#include "translab/error.hpp"
#include "translab/linalg.hpp"
#include "translab/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace translab {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

std::string strip_parens(std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool outer = true;
        for (size_t k = 0; k + 1 < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')') --depth;
            if (depth == 0) {
                outer = false;
                break;
            }
        }
        if (!outer) break;
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

// splits at top-level + and -, each piece keeps its sign
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool sign_split = depth == 0 && (c == '+' || c == '-') && k > 0 && s[k - 1] != '*' && s[k - 1] != '/' &&
                          s[k - 1] != '^' && s[k - 1] != '(';
        if (sign_split && !cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
        cur += c;
    }
    if (depth != 0) fail(ErrorKind::Parse, "unbalanced parentheses in '" + s + "'");
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<CBall> symbol_values(const SymbolList& syms, long prec) {
    std::vector<CBall> v;
    v.reserve(syms.size());
    for (const auto& s : syms) v.push_back(enclose_complex(s.value, prec));
    return v;
}

CBall exponent_from_values(const std::vector<CBall>& vals, const Exponent& e, long prec) {
    CBall r(prec);
    for (size_t k = 0; k < e.size(); ++k)
        if (sgn(e[k]) != 0) r += CBall(ExactScalar(e[k]), prec) * vals[k];
    return r;
}

Ball upper_ball(const Mpfr& x, long prec) { return Ball::from_mid_rad(x, Mpfr(), prec); }

Exponent remap(const Exponent& e, const SymbolList& from, const SymbolList& to) {
    Exponent out(to.size(), Rat(0));
    for (size_t k = 0; k < from.size(); ++k) {
        auto it = std::find_if(to.begin(), to.end(), [&](const ExpSymbol& s) { return s.name == from[k].name; });
        if (it == to.end()) fail(ErrorKind::Precondition, "symbol '" + from[k].name + "' missing from target list");
        out[static_cast<size_t>(it - to.begin())] = e[k];
    }
    return out;
}

long unit_symbol(const SymbolList& syms) {
    for (size_t k = 0; k < syms.size(); ++k)
        if (syms[k].value == ClosedForm(1)) return static_cast<long>(k);
    return -1;
}

Exponent parse_exponent(const std::string& arg0, const SymbolList& syms) {
    std::string arg = strip_parens(arg0);
    Exponent e(syms.size(), Rat(0));
    auto unit = [&]() {
        long u = unit_symbol(syms);
        if (u < 0) fail(ErrorKind::Parse, "bare multiple of z needs a symbol with value 1");
        return static_cast<size_t>(u);
    };
    if (arg == "z" || arg == "-z") {
        e[unit()] = arg == "z" ? 1 : -1;
        return e;
    }
    if (arg.size() < 3 || arg.substr(arg.size() - 2) != "*z")
        fail(ErrorKind::Parse, "exponent '" + arg0 + "' must have the form (...)*z");
    std::string lin = strip_parens(arg.substr(0, arg.size() - 2));
    for (std::string t : split_terms(lin)) {
        Rat sign = 1;
        if (t[0] == '+' || t[0] == '-') {
            if (t[0] == '-') sign = -1;
            t.erase(0, 1);
        }
        std::string q = "1", name = t;
        auto star = t.rfind('*');
        if (star != std::string::npos) {
            q = t.substr(0, star);
            name = t.substr(star + 1);
        }
        auto it = std::find_if(syms.begin(), syms.end(), [&](const ExpSymbol& s) { return s.name == name; });
        size_t idx;
        if (it != syms.end()) {
            idx = static_cast<size_t>(it - syms.begin());
        } else {
            // a bare rational multiplies the unit symbol
            q = t;
            idx = unit();
        }
        e[idx] += sign * parse_rat(strip_parens(q));
    }
    return e;
}

std::string rat_coeff_str(const Rat& q, const std::string& name, bool first) {
    std::string s;
    Rat a = abs(q);
    if (sgn(q) < 0) s = "-";
    else if (!first) s = "+";
    if (a != 1) s += rat_str(a) + "*";
    return s + name;
}

std::string exponent_str(const Exponent& e, const SymbolList& syms) {
    std::string lin;
    int count = 0;
    for (size_t k = 0; k < e.size(); ++k) {
        if (sgn(e[k]) == 0) continue;
        lin += rat_coeff_str(e[k], syms[k].name, count == 0);
        ++count;
    }
    if (count == 1 && lin[0] != '-') return "exp(" + lin + "*z)";
    return "exp((" + lin + ")*z)";
}

bool is_zero_exponent(const Exponent& e) {
    return std::all_of(e.begin(), e.end(), [](const Rat& q) { return sgn(q) == 0; });
}

std::string scalar_factor(const ExactScalar& c) {
    if (c.is_real()) return rat_str(c.re());
    return "(" + c.str() + ")";
}

}  // namespace

SymbolList parse_symbols(const std::string& s0) {
    SymbolList out;
    std::string s = strip_spaces(s0);
    if (s.empty()) return out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            fail(ErrorKind::Parse, "symbol declaration '" + item + "' must look like name=value");
        std::string name = item.substr(0, eq), val = item.substr(eq + 1);
        if (name == "z" || name == "exp" || !std::isalpha(static_cast<unsigned char>(name[0])))
            fail(ErrorKind::Parse, "invalid symbol name '" + name + "'");
        for (const auto& o : out)
            if (o.name == name) fail(ErrorKind::Parse, "symbol '" + name + "' declared twice");
        ClosedForm v;
        try {
            v = ClosedForm(ExactScalar::parse(val));
        } catch (const Error&) {
            v = ClosedForm::parse(val);
        }
        out.push_back({name, v});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

CBall exponent_value(const SymbolList& syms, const Exponent& e, long prec) {
    return exponent_from_values(symbol_values(syms, prec), e, prec);
}

SymbolList merge_symbols(const SymbolList& a, const SymbolList& b) {
    SymbolList out = a;
    for (const auto& s : b) {
        auto it = std::find_if(out.begin(), out.end(), [&](const ExpSymbol& o) { return o.name == s.name; });
        if (it == out.end()) out.push_back(s);
        else if (!(it->value == s.value))
            fail(ErrorKind::Precondition, "symbol '" + s.name + "' declared with two different values");
    }
    return out;
}

ExpPoly ExpPoly::constant(const SymbolList& syms, const ExactScalar& c) {
    ExpPoly f(syms);
    f.add(Exponent(syms.size(), Rat(0)), c);
    return f;
}

ExpPoly ExpPoly::term(const SymbolList& syms, const ExactScalar& c, Exponent e) {
    if (e.size() != syms.size()) fail(ErrorKind::Shape, "exponent length differs from symbol count");
    ExpPoly f(syms);
    f.add(std::move(e), c);
    return f;
}

void ExpPoly::add(Exponent e, const ExactScalar& c) {
    if (e.size() != syms_.size()) fail(ErrorKind::Shape, "exponent length differs from symbol count");
    for (auto& q : e) q.canonicalize();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(std::move(e), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly ExpPoly::parse(const std::string& s, const SymbolList& syms) {
    PolyExpPoly p = PolyExpPoly::parse(s, syms);
    ExpPoly f(syms);
    for (const auto& [e, c] : p.terms()) {
        if (c.degree() > 0) fail(ErrorKind::Parse, "polynomial coefficient in an exponential polynomial");
        f.add(e, c[0]);
    }
    return f;
}

ExpPoly ExpPoly::with_symbols(const SymbolList& syms) const {
    ExpPoly out(syms);
    for (const auto& [e, c] : terms_) out.add(remap(e, syms_, syms), c);
    return out;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    SymbolList s = merge_symbols(a.syms_, b.syms_);
    ExpPoly r = a.with_symbols(s);
    for (const auto& [e, c] : b.terms_) r.add(remap(e, b.syms_, s), c);
    return r;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r(syms_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    SymbolList s = merge_symbols(a.syms_, b.syms_);
    ExpPoly x = a.with_symbols(s), y = b.with_symbols(s), r(s);
    for (const auto& [e1, c1] : x.terms_)
        for (const auto& [e2, c2] : y.terms_) {
            Exponent e(s.size());
            for (size_t k = 0; k < s.size(); ++k) e[k] = e1[k] + e2[k];
            r.add(std::move(e), c1 * c2);
        }
    return r;
}

ExpPoly ep_mul(const ExpPoly& f, const ExpPoly& g) { return f * g; }

bool operator==(const ExpPoly& a, const ExpPoly& b) {
    SymbolList s = merge_symbols(a.syms_, b.syms_);
    return a.with_symbols(s).terms_ == b.with_symbols(s).terms_;
}

CBall ExpPoly::eval(const CBall& z, long prec) const { return eval_derivative(z, 0, prec); }

CBall ExpPoly::eval_derivative(const CBall& z, unsigned order, long prec) const {
    auto vals = symbol_values(syms_, prec);
    CBall r(prec);
    for (const auto& [e, c] : terms_) {
        CBall mu = exponent_from_values(vals, e, prec);
        CBall t = CBall(c, prec) * exp(mu * z);
        if (order > 0) t *= pow(mu, order);
        r += t;
    }
    return r;
}

Ball ExpPoly::sup_bound(const Ball& R, unsigned order, long prec) const {
    auto vals = symbol_values(syms_, prec);
    Ball s(prec);
    for (const auto& [e, c] : terms_) {
        Ball mu = upper_ball(exponent_from_values(vals, e, prec).abs_upper(), prec);
        Ball lam = upper_ball(CBall(c, prec).abs_upper(), prec);
        Ball t = lam * exp(mu * R);
        if (order > 0) t *= pow(mu, order);
        s += t;
    }
    return s;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string t;
        if (is_zero_exponent(e)) {
            t = c.str();
        } else {
            std::string ex = exponent_str(e, syms_);
            if (c.is_one()) t = ex;
            else if (c == ExactScalar(-1)) t = "-" + ex;
            else t = scalar_factor(c) + "*" + ex;
        }
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out;
}

SupportInfo support_dim(const ExpPoly& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "support of the zero exponential polynomial");
    RatMatrix m;
    for (const auto& [e, c] : f.terms()) m.push_back(e);
    RankInfo r = rational_rank(m);
    SupportInfo info;
    info.dim = r.rank;
    for (size_t i : r.independent_rows) info.basis.push_back(m[i]);
    return info;
}

bool is_simple(const ExpPoly& f) { return support_dim(f).dim == 1; }

std::vector<CBall> RittFactorization::expand(long prec) const {
    std::vector<CBall> p{CBall(unit_coeff, prec)};
    for (const auto& fac : factors) {
        CBall a = fac.exact ? CBall(fac.alpha, prec) : fac.alpha_ball;
        std::vector<CBall> q(p.size() + 1, CBall(prec));
        for (size_t k = 0; k < p.size(); ++k) {
            q[k] += p[k];
            q[k + 1] -= a * p[k];
        }
        p = std::move(q);
    }
    return p;
}

RittFactorization ritt_factor_simple(const ExpPoly& f, long prec) {
    SupportInfo info = support_dim(f);
    if (info.dim != 1) fail(ErrorKind::NotSimple, "support dimension is " + std::to_string(info.dim) + ", not 1");
    const SymbolList& syms = f.symbols();
    // primitive integer vector along the support direction, first nonzero coordinate positive
    Exponent u = info.basis[0];
    Int l = 1;
    for (const auto& q : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    Int g = 0;
    for (const auto& q : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Int(q * l).get_mpz_t());
    size_t lead = 0;
    while (sgn(u[lead]) == 0) ++lead;
    Rat scale = Rat(l) / Rat(g);
    if (sgn(u[lead]) < 0) scale = -scale;
    for (auto& q : u) q *= scale;

    // every exponent is t * u with t rational; bring to a common denominator D
    std::vector<std::pair<Rat, ExactScalar>> ts;
    Int D = 1;
    for (const auto& [e, c] : f.terms()) {
        Rat t = e[lead] / u[lead];
        ts.emplace_back(t, c);
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), t.get_den_mpz_t());
    }
    Int nmin;
    bool have = false;
    std::vector<std::pair<Int, ExactScalar>> ns;
    for (const auto& [t, c] : ts) {
        Int n = Int(t * D);
        if (!have || n < nmin) nmin = n;
        have = true;
        ns.emplace_back(n, c);
    }

    RittFactorization r;
    r.symbols = syms;
    r.rho = u;
    for (auto& q : r.rho) q /= Rat(D);
    r.unit_exponent = r.rho;
    for (auto& q : r.unit_exponent) q *= Rat(nmin);
    ExactScalar c0;
    std::vector<ExactScalar> pc;
    for (const auto& [n, c] : ns) {
        Int k = n - nmin;
        if (!k.fits_slong_p() || k > 100000) fail(ErrorKind::Precondition, "exponent spread too large to factor");
        size_t ki = k.get_ui();
        if (pc.size() <= ki) pc.resize(ki + 1, ExactScalar(0));
        pc[ki] += c;
        if (ki == 0) c0 = c;
        r.powers.push_back(static_cast<long>(ki));
    }
    std::sort(r.powers.begin(), r.powers.end());
    r.unit_coeff = c0;
    for (auto& v : pc) v /= c0;
    GPoly p(pc);  // p(0) = 1, so p(w) = prod (1 - w / beta)
    GPoly rest;
    for (const auto& root : gaussian_rational_roots(p, &rest))
        for (unsigned m = 0; m < root.multiplicity; ++m) {
            RittFactor fac;
            fac.exact = true;
            fac.alpha = root.value.inverse();
            fac.alpha_ball = CBall(fac.alpha, prec);
            r.factors.push_back(fac);
        }
    if (rest.degree() >= 1) {
        CBall one(ExactScalar(1), prec);
        for (const auto& enc : isolate_roots(rest, prec))
            for (unsigned m = 0; m < enc.multiplicity; ++m) {
                RittFactor fac;
                fac.alpha_ball = one / enc.z;
                r.factors.push_back(fac);
            }
    }
    return r;
}

bool ritt_roundtrip(const ExpPoly& f, const RittFactorization& r, long prec) {
    ExpPoly g = f.with_symbols(r.symbols);
    std::vector<CBall> ex = r.expand(prec);
    std::map<Exponent, ExactScalar> want;
    for (size_t k = 0; k < ex.size(); ++k) {
        Exponent e = r.unit_exponent;
        for (size_t j = 0; j < e.size(); ++j) e[j] += Rat(static_cast<long>(k)) * r.rho[j];
        auto it = g.terms().find(e);
        ExactScalar c = it == g.terms().end() ? ExactScalar(0) : it->second;
        if (!ex[k].contains(c)) return false;
        want.emplace(e, c);
    }
    for (const auto& [e, c] : g.terms())
        if (!want.count(e)) return false;
    return true;
}

SinDivision divide_by_sin(const ExpPoly& f0, long prec, std::uint64_t seed) {
    SymbolList syms = f0.symbols();
    long P = -1;
    for (size_t k = 0; k < syms.size(); ++k) {
        std::string s = syms[k].value.str();
        if (s == "pi*i" || s == "i*pi") P = static_cast<long>(k);
    }
    if (P < 0) {
        std::string name = "pii";
        while (std::any_of(syms.begin(), syms.end(), [&](const ExpSymbol& s) { return s.name == name; })) name += "_";
        syms.push_back({name, ClosedForm::parse("pi*i")});
        P = static_cast<long>(syms.size()) - 1;
    }
    size_t pi_idx = static_cast<size_t>(P);
    ExpPoly f = f0.with_symbols(syms);

    // class key: all other coordinates and the pi*i coordinate modulo 2
    std::map<Exponent, std::vector<std::pair<Exponent, ExactScalar>>> classes;
    for (const auto& [e, c] : f.terms()) {
        Exponent key = e;
        Rat b = e[pi_idx] / 2;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
        key[pi_idx] = e[pi_idx] - 2 * Rat(fl);
        classes[key].emplace_back(e, c);
    }

    ExpPoly G(syms);
    const ExactScalar two_i(Rat(0), Rat(2));
    for (const auto& [key, members] : classes) {
        ExactScalar total(0);
        for (const auto& m : members) total += m.second;
        if (!total.is_zero())
            fail(ErrorKind::HypothesisViolated,
                 "coefficients of a class of exponents agreeing at integers do not cancel; f does not vanish on Z");
        // sum lambda_j e^{mu0 z} (e^{2 pi i k_j z} - 1) with mu0 the first member
        const Exponent& mu0 = members.front().first;
        for (size_t j = 1; j < members.size(); ++j) {
            const auto& [e, lam] = members[j];
            Rat kq = (e[pi_idx] - mu0[pi_idx]) / 2;
            if (kq.get_den() != 1) fail(ErrorKind::Internal, "class members differ by a non-integer shift");
            long k = Int(kq).get_si();
            // e^{2 pi i k z} - 1 = sin(pi z) 2i sum_{t<k} e^{(2t+1) pi i z} for k > 0; the negative
            // case is -e^{2 pi i k z} times the positive one
            long kk = k > 0 ? k : -k;
            ExactScalar c = k > 0 ? lam * two_i : -(lam * two_i);
            for (long t = 0; t < kk; ++t) {
                Exponent g = mu0;
                g[pi_idx] += Rat(2 * t + 1) + (k < 0 ? Rat(2 * k) : Rat(0));
                G.add(std::move(g), c);
            }
        }
    }

    SinDivision out;
    out.G = G;
    out.verified = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-3L << 20, 3L << 20);
    Ball pi = Ball::pi(prec);
    Mpfr thresh(64);
    mpfr_set_ui_2exp(thresh.get(), 1, -prec / 2, MPFR_RNDN);
    for (int s = 0; s < 16; ++s) {
        Rat x, y;
        do {
            x = Rat(coord(rng), 1L << 20);
            y = Rat(coord(rng), 1L << 20);
        } while (x * x + y * y > 9);
        CBall z(Ball(x, prec), Ball(y, prec));
        CBall d = f.eval(z, prec) - sin(z * CBall(pi)) * G.eval(z, prec);
        Mpfr rad = d.abs_upper();
        double rd = mpfr_get_d(rad.get(), MPFR_RNDU);
        out.max_radius = std::max(out.max_radius, rd);
        if (!d.contains_zero() || mpfr_cmp(rad.get(), thresh.get()) >= 0) out.verified = false;
    }
    return out;
}

PolyExpPoly::PolyExpPoly(const ExpPoly& f) : syms_(f.symbols()) {
    for (const auto& [e, c] : f.terms()) terms_.emplace(e, GPoly(c));
}

void PolyExpPoly::add(Exponent e, const GPoly& p) {
    if (e.size() != syms_.size()) fail(ErrorKind::Shape, "exponent length differs from symbol count");
    for (auto& q : e) q.canonicalize();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!p.is_zero()) terms_.emplace(std::move(e), p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
}

PolyExpPoly PolyExpPoly::from_terms(const SymbolList& syms, const std::vector<std::pair<Exponent, GPoly>>& terms) {
    PolyExpPoly f(syms);
    for (const auto& [e, p] : terms) {
        Exponent c = e;
        for (auto& q : c) q.canonicalize();
        if (f.terms_.count(c)) fail(ErrorKind::DuplicateExponent, "exponent listed twice");
        if (p.is_zero()) fail(ErrorKind::Precondition, "zero polynomial coefficient");
        f.add(c, p);
    }
    return f;
}

PolyExpPoly PolyExpPoly::parse(const std::string& s0, const SymbolList& syms) {
    std::string s = strip_spaces(s0);
    if (s.empty()) fail(ErrorKind::Parse, "empty exponential polynomial");
    PolyExpPoly f(syms);
    for (std::string t : split_terms(s)) {
        bool neg = false;
        if (t[0] == '+' || t[0] == '-') {
            neg = t[0] == '-';
            t.erase(0, 1);
        }
        // locate a top-level exp(
        size_t at = std::string::npos;
        int depth = 0;
        for (size_t k = 0; k + 3 < t.size(); ++k) {
            if (t[k] == '(') ++depth;
            if (t[k] == ')') --depth;
            if (depth == 0 && t.compare(k, 4, "exp(") == 0 && (k == 0 || t[k - 1] == '*')) {
                at = k;
                break;
            }
        }
        std::string coef = t;
        Exponent e(syms.size(), Rat(0));
        if (at != std::string::npos) {
            size_t open = at + 3, close = open;
            depth = 0;
            for (; close < t.size(); ++close) {
                if (t[close] == '(') ++depth;
                if (t[close] == ')' && --depth == 0) break;
            }
            if (close >= t.size() || close + 1 != t.size())
                fail(ErrorKind::Parse, "exp(...) must close the term in '" + t + "'");
            e = parse_exponent(t.substr(open + 1, close - open - 1), syms);
            coef = t.substr(0, at);
            if (!coef.empty()) coef.pop_back();
            if (coef.empty()) coef = "1";
        }
        coef = strip_parens(coef);
        GPoly p;
        try {
            p = GPoly(ExactScalar::parse(coef));
        } catch (const Error&) {
            p = to_gaussian(parse_poly(coef, "z"));
        }
        if (neg) p = -p;
        f.add(std::move(e), p);
    }
    return f;
}

CBall PolyExpPoly::eval(const CBall& z, long prec) const {
    auto vals = symbol_values(syms_, prec);
    CBall r(prec);
    for (const auto& [e, p] : terms_) r += eval_cball(p, z) * exp(exponent_from_values(vals, e, prec) * z);
    return r;
}

Ball PolyExpPoly::omega(long prec) const {
    auto vals = symbol_values(syms_, prec);
    Mpfr best(prec);
    for (const auto& [e, p] : terms_) {
        Mpfr a = exponent_from_values(vals, e, prec).abs_upper();
        if (mpfr_cmp(a.get(), best.get()) > 0) best = a;
    }
    return upper_ball(best, prec);
}

unsigned PolyExpPoly::degree_sum() const {
    unsigned d = 0;
    for (const auto& [e, p] : terms_) d += static_cast<unsigned>(p.degree());
    return d;
}

std::string PolyExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, p] : terms_) {
        std::string coef = poly_str(p, "z");
        std::string t;
        if (is_zero_exponent(e)) {
            t = coef;
        } else {
            std::string ex = exponent_str(e, syms_);
            if (p.degree() == 0 && p[0].is_one()) t = ex;
            else if (p.degree() == 0 && p[0] == ExactScalar(-1)) t = "-" + ex;
            else t = "(" + coef + ")*" + ex;
        }
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out;
}

unsigned long real_zero_bound(const PolyExpPoly& f) {
    if (f.size() == 0) fail(ErrorKind::ZeroPolynomial, "zero bound of the zero function");
    auto vals = symbol_values(f.symbols(), 64);
    for (const auto& [e, p] : f.terms()) {
        for (size_t k = 0; k < e.size(); ++k)
            if (sgn(e[k]) != 0 && !vals[k].is_real_exact())
                fail(ErrorKind::Precondition, "exponent symbol '" + f.symbols()[k].name + "' is not real");
        for (const auto& c : p.coeffs())
            if (!c.is_real()) fail(ErrorKind::Precondition, "real zero bound needs real coefficients");
    }
    return f.degree_sum() + f.size() - 1;
}

long complex_zero_bound(const PolyExpPoly& f, const Ball& R, bool sharp) {
    if (f.size() == 0) fail(ErrorKind::ZeroPolynomial, "zero bound of the zero function");
    long prec = std::max<long>(R.prec(), 128);
    Ball omega = f.omega(prec);
    long dsum = static_cast<long>(f.degree_sum()), n = static_cast<long>(f.size());
    Ball b(prec);
    if (sharp) b = Ball(2 * (dsum + n - 1), prec) + Ball(4, prec) / Ball::pi(prec) * R * omega;
    else b = Ball(3 * (dsum + n - 1), prec) + Ball(4, prec) * R * omega;
    Rat up = b.upper_rat();
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), up.get_num_mpz_t(), up.get_den_mpz_t());
    if (!c.fits_slong_p()) fail(ErrorKind::InsufficientPrecision, "zero bound overflows");
    return c.get_si();
}

namespace {

// argument of q in (-pi, pi) when the quadrant is certified
bool certified_arg(const CBall& q, const Ball& pi, Ball& out) {
    const Ball& x = q.re();
    const Ball& y = q.im();
    if (x.positive()) {
        out = atan(y / x);
        return true;
    }
    if (y.positive()) {
        out = pi.mul_2exp(-1) - atan(x / y);
        return true;
    }
    if (y.negative()) {
        out = -pi.mul_2exp(-1) - atan(x / y);
        return true;
    }
    return false;
}

struct ArcCounter {
    const PolyExpPoly& f;
    Ball R;
    long prec;
    Ball pi;
    Ball total;
    static constexpr int max_depth = 22;

    CBall point(const Rat& t) const {
        Ball th = Ball(t, prec) * pi.mul_2exp(1);
        return CBall(R * cos(th), R * sin(th));
    }

    void arc(const Rat& t0, const Rat& t1, const CBall& fa, const CBall& fb, int depth) {
        Rat tm = (t0 + t1) / 2;
        CBall box = point(tm);
        Ball half = R * pi * Ball(t1 - t0, prec);
        box = box.add_error(half.abs_upper());
        CBall fbox = f.eval(box, prec);
        if (!fbox.contains_zero()) {
            Ball inc(prec);
            if (certified_arg(fb * fa.conj(), pi, inc)) {
                total += inc;
                return;
            }
        }
        CBall fm = f.eval(point(tm), prec);
        if (fa.contains_zero() || fb.contains_zero() || fm.contains_zero())
            fail(ErrorKind::ZeroOnBoundary, "f cannot be separated from zero on the circle near t = " + rat_str(tm));
        if (depth >= max_depth)
            fail(ErrorKind::InsufficientPrecision, "arc subdivision limit reached near t = " + rat_str(tm));
        arc(t0, tm, fa, fm, depth + 1);
        arc(tm, t1, fm, fb, depth + 1);
    }
};

}  // namespace

long count_zeros_numeric(const PolyExpPoly& f, const Ball& R, long prec) {
    if (f.size() == 0) fail(ErrorKind::ZeroPolynomial, "zero counting for the zero function");
    if (!R.positive()) fail(ErrorKind::Precondition, "radius must be positive");
    ArcCounter c{f, R.with_prec(prec), prec, Ball::pi(prec), Ball(prec)};
    const int arcs = 16;
    std::vector<CBall> vals;
    for (int j = 0; j <= arcs; ++j) vals.push_back(f.eval(c.point(Rat(j, arcs)), prec));
    for (int j = 0; j < arcs; ++j) c.arc(Rat(j, arcs), Rat(j + 1, arcs), vals[j], vals[j + 1], 0);
    Ball w = c.total / c.pi.mul_2exp(1);
    long k = std::lround(w.mid_double());
    if (!certainly_lt((w - Ball(k, prec)).abs(), Ball(Rat(1, 2), prec)))
        fail(ErrorKind::InsufficientPrecision, "winding enclosure does not isolate an integer");
    return k;
}

unsigned real_sign_changes(const PolyExpPoly& f, const Rat& a, const Rat& b, unsigned N, long prec) {
    if (N == 0 || a >= b) fail(ErrorKind::Precondition, "need a < b and at least one step");
    real_zero_bound(f);  // validates real data
    int last = 0;
    unsigned changes = 0;
    for (unsigned j = 0; j <= N; ++j) {
        Rat x = a + (b - a) * Rat(j, N);
        Ball v = f.eval(CBall(Ball(x, prec)), prec).re();
        int s = v.positive() ? 1 : v.negative() ? -1 : 0;
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

CBall cball_det(std::vector<std::vector<CBall>> m) {
    size_t n = m.size();
    if (n == 0) return CBall(ExactScalar(1), 64);
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Shape, "determinant needs a square matrix");
    if (n > 8) fail(ErrorKind::Precondition, "ball determinant limited to 8x8");
    long prec = m[0][0].prec();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CBall det(prec);
    do {
        int sign = 1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        CBall t(ExactScalar(sign), prec);
        for (size_t i = 0; i < n; ++i) t *= m[i][perm[i]];
        det += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

InterpReport interp_det_check(const std::vector<ExpPoly>& fs, const std::vector<CBall>& zetas, const Rat& r,
                              const Rat& R, const std::vector<unsigned>& sigmas0, long prec) {
    size_t L = fs.size();
    if (L == 0 || zetas.size() != L) fail(ErrorKind::Shape, "need L functions and L points");
    if (sgn(r) <= 0 || r > R) fail(ErrorKind::Precondition, "need 0 < r <= R");
    std::vector<unsigned> sigmas = sigmas0.empty() ? std::vector<unsigned>(L, 0) : sigmas0;
    if (sigmas.size() != L) fail(ErrorKind::Shape, "need one derivative order per point");
    Ball rb(r, prec), Rb(R, prec);
    for (const auto& z : zetas)
        if (!certainly_le(z.abs(), rb)) fail(ErrorKind::Precondition, "interpolation point outside |z| <= r");

    std::vector<std::vector<CBall>> m(L, std::vector<CBall>(L, CBall(prec)));
    for (size_t i = 0; i < L; ++i)
        for (size_t j = 0; j < L; ++j) m[i][j] = fs[j].eval_derivative(zetas[i], sigmas[i], prec);
    InterpReport rep;
    rep.det_abs = cball_det(m).abs();

    long e = -static_cast<long>(L * (L - 1) / 2);
    for (unsigned s : sigmas) e += static_cast<long>(s);
    Rat ratio = R / r;
    Rat scale = 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) scale *= ratio;
    if (e < 0) scale = 1 / scale;
    Ball bound(scale, prec);
    for (size_t k = 2; k <= L; ++k) bound *= Ball(static_cast<long>(k), prec);
    for (size_t j = 0; j < L; ++j) {
        Ball best = fs[j].sup_bound(Rb, sigmas[0], prec);
        for (size_t i = 1; i < L; ++i) {
            Ball b = fs[j].sup_bound(Rb, sigmas[i], prec);
            if (mpfr_cmp(b.upper_bound().get(), best.upper_bound().get()) > 0) best = b;
        }
        bound *= upper_ball(best.upper_bound(), prec);
    }
    rep.bound = bound;
    rep.holds = certainly_le(rep.det_abs, rep.bound);
    return rep;
}

}  // namespace translab
