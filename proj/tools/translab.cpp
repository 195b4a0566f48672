#include "selftest.hpp"

#include "translab/bernoulli.hpp"
#include "translab/ering.hpp"
#include "translab/error.hpp"
#include "translab/exppoly.hpp"
#include "translab/irrationality.hpp"
#include "translab/liouville.hpp"
#include "translab/qlinalg.hpp"
#include "translab/summation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace translab;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitInternal = 1, kExitDomain = 2, kExitUsage = 64;
constexpr std::uint64_t kDefaultSeed = 20240601;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    long prec = 256;
    long N = 100000;
    std::uint64_t seed = kDefaultSeed;
    bool json = false;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json checks = json::array();
    std::vector<std::string> lines;
    bool failed = false;

    void line(const std::string& s) { lines.push_back(s); }
    void check(const std::string& name, const std::string& verdict, const std::string& detail) {
        checks.push_back({{"name", name}, {"verdict", verdict}, {"detail", detail}});
        failed = failed || verdict == "fail";
    }
    void check(const std::string& name, bool ok, const std::string& detail) {
        check(name, std::string(ok ? "pass" : "fail"), detail);
    }
    void check(const std::string& name, const char* verdict, const std::string& detail) {
        check(name, std::string(verdict), detail);
    }

    void print(bool as_json, std::ostream& os) const {
        if (as_json) {
            json j = {{"command", command}, {"inputs", inputs}, {"result", result}, {"checks", checks}};
            os << j.dump(2) << '\n';
            return;
        }
        for (const auto& l : lines) os << l << '\n';
        for (const auto& c : checks)
            os << "check " << c["name"].get<std::string>() << ": " << c["verdict"].get<std::string>() << " ("
               << c["detail"].get<std::string>() << ")\n";
    }
};

json ball_json(const Ball& b) { return {{"mid", b.mid_str()}, {"rad", b.rad_str()}}; }
std::string ball_text(const Ball& b) { return "[" + b.mid_str() + " +/- " + b.rad_str() + "]"; }
json cball_json(const CBall& c) { return {{"re", ball_json(c.re())}, {"im", ball_json(c.im())}}; }
std::string cball_text(const CBall& c) {
    if (c.im().is_exact() && c.im().contains(Rat(0))) return ball_text(c.re());
    return ball_text(c.re()) + " + " + ball_text(c.im()) + "*i";
}

std::string tuple_str(const std::vector<std::string>& parts) {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
}
std::vector<std::string> int_strs(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}
std::vector<std::string> rat_strs(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(rat_str(x));
    return out;
}

std::string exponent_str(const SymbolList& syms, const Exponent& e) {
    std::string s;
    for (size_t k = 0; k < e.size() && k < syms.size(); ++k) {
        if (e[k] == 0) continue;
        std::string c = e[k] == 1 ? "" : e[k] == -1 ? "-" : rat_str(e[k]) + "*";
        if (!s.empty() && e[k] > 0) s += "+";
        s += c + syms[k].name;
    }
    return s.empty() ? "0" : s;
}

std::string read_arg(const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw UsageError("cannot read " + s.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<unsigned> parse_digits(const std::string& s, unsigned base) {
    std::vector<unsigned> out;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("bad digit '" + part + "'");
            out.push_back(static_cast<unsigned>(std::stoul(part)));
        }
    } else {
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw UsageError(std::string("bad digit '") + ch + "'");
            out.push_back(static_cast<unsigned>(ch - '0'));
        }
    }
    for (unsigned d : out)
        if (d >= base) throw UsageError("digit " + std::to_string(d) + " is not below the base");
    return out;
}

QPoly power_of_shift(unsigned s) {
    QPoly b(Rat(1)), lin(std::vector<Rat>{Rat(1), Rat(1)});
    for (unsigned k = 0; k < s; ++k) b = b * lin;
    return b;
}

// ---------------------------------------------------------------- zeta

void zeta_cmd(Report& r, const Settings& st, unsigned even, unsigned odd) {
    if ((even == 0) == (odd == 0)) throw UsageError("give exactly one of --even n or --odd n (n >= 1)");
    unsigned s = even ? 2 * even : 2 * odd + 1;
    r.inputs = {{"even", even}, {"odd", odd}, {"prec", st.prec}, {"N", st.N}};
    Ball value(st.prec);
    if (even) {
        Rat q = zeta_even(even);
        std::string closed = SymbolicSum::pi(2 * static_cast<long>(even)).scaled(ExactScalar(q)).str();
        value = Ball(q, st.prec) * pow(Ball::pi(st.prec), 2 * even);
        r.result["closed_form"] = closed;
        r.result["rational"] = rat_str(q);
        r.line("zeta(" + std::to_string(s) + ") = " + closed);
    } else {
        value = zeta_odd_via_conj(odd, st.prec);
        r.result["closed_form"] = nullptr;
        r.result["method"] = "conjugate Bernoulli";
        r.line("zeta(" + std::to_string(s) + ") via conjugate Bernoulli");
    }
    r.result["value"] = ball_json(value);
    r.line("enclosure " + ball_text(value));
    Ball partial = unilateral_partial_sum(QPoly(Rat(1)), power_of_shift(s), st.N, st.prec);
    r.check("truncated-series", value.overlaps(partial),
            "sum to N=" + std::to_string(st.N) + " with tail " + ball_text(partial));
}

// ---------------------------------------------------------------- sum

void series_check(Report& r, const CBall& value, const std::function<Ball()>& partial, long N) {
    try {
        Ball p = partial();
        bool ok = value.re().overlaps(p) && value.im().contains_zero();
        r.check("truncation", ok, "N=" + std::to_string(N) + " partial sum with tail " + ball_text(p));
    } catch (const Error& e) {
        r.check("truncation", "skipped", e.what());
    }
}

void geometric_check(Report& r, const QPoly& P, const ExactScalar& z, const CBall& exact, long N, long prec) {
    CBall zb(z, prec), pw(Ball(1, prec), Ball(prec)), S(prec);
    for (long n = 0; n <= N; ++n) {
        S += eval_cball(P, CBall(Ball(n, prec), Ball(prec))) * pw;
        pw = pw * zb;
    }
    // terms past N are dominated by |P|(n) |z|^n whose ratio is at most ((N+2)/(N+1))^d |z|
    Ball rz = zb.abs();
    Rat absP(0), x(N + 1);
    for (int i = P.degree(); i >= 0; --i) absP = absP * x + abs(P[static_cast<size_t>(i)]);
    Ball rho = pow(Ball(Rat(N + 2, N + 1), prec), static_cast<unsigned long>(std::max(P.degree(), 0))) * rz;
    if (!certainly_lt(rho, Ball(1, prec))) {
        r.check("truncation", "skipped", "the tail ratio bound is not below 1 at this N");
        return;
    }
    Ball tail = Ball(absP, prec) * pow(rz, static_cast<unsigned long>(N + 1)) / (Ball(1, prec) - rho);
    Rat t = tail.upper_rat();
    CBall widened(S.re().add_error(t), S.im().add_error(t));
    bool ok = widened.re().overlaps(exact.re()) && widened.im().overlaps(exact.im());
    r.check("truncation", ok, "N=" + std::to_string(N) + " partial sum with tail " + cball_text(widened));
}

// 1/(n^2 + C^2) has no rational roots; it goes through the n >= 1 quadratic sum
SeriesValue unilateral_sum(const QPoly& a, const QPoly& b, long prec) {
    Rat c = b[0];
    bool quadratic = a == QPoly(Rat(1)) && b.degree() == 2 && b[2] == 1 && b[1] == 0 && c > 0 &&
                     mpz_perfect_square_p(c.get_num_mpz_t()) && mpz_perfect_square_p(c.get_den_mpz_t());
    if (!quadratic) return unilateral_rational_sum(a, b, prec);
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), c.get_den_mpz_t());
    SeriesValue v = unilateral_quadratic_sum(Rat(num, den), prec);
    ExactScalar first(Rat(1) / c);
    if (v.exact) *v.exact += SymbolicSum(first);
    v.value += CBall(first, prec);
    return v;
}

void sum_cmd(Report& r, const Settings& st, const std::string& A, const std::string& B, const std::string& P,
             const std::string& z, bool bilateral, bool unilateral, bool power) {
    if (bilateral + unilateral + power != 1) throw UsageError("give exactly one of --bilateral, --unilateral, --power");
    r.inputs = {{"prec", st.prec}, {"N", st.N}};
    if (power) {
        if (P.empty() || z.empty()) throw UsageError("--power needs --P and --z");
        r.inputs["mode"] = "power";
        r.inputs["P"] = P;
        r.inputs["z"] = z;
        QPoly p = parse_poly(P);
        ExactScalar zz = ExactScalar::parse(z);
        ExactScalar v = geometric_poly_sum(p, zz);
        CBall vb(v, st.prec);
        r.result["closed_form"] = v.str();
        r.result["value"] = cball_json(vb);
        r.line("sum over n >= 0 of (" + poly_str(p, "n") + ") * (" + zz.str() + ")^n = " + v.str());
        r.line("enclosure " + cball_text(vb));
        geometric_check(r, p, zz, vb, st.N, st.prec);
        return;
    }
    if (B.empty()) throw UsageError("--B is required");
    r.inputs["mode"] = bilateral ? "bilateral" : "unilateral";
    r.inputs["A"] = A;
    r.inputs["B"] = B;
    QPoly a = parse_poly(A), b = parse_poly(B);
    SeriesValue v = bilateral ? bilateral_rational_sum(a, b, st.prec) : unilateral_sum(a, b, st.prec);
    r.result["closed_form"] = v.has_closed_form() ? json(v.closed_form()) : json(nullptr);
    r.result["value"] = cball_json(v.value);
    r.line(std::string(bilateral ? "sum over all integers n" : "sum over n >= 0") + " of (" + poly_str(a, "n") +
           ")/(" + poly_str(b, "n") + ")");
    r.line(v.has_closed_form() ? "closed form " + v.closed_form() : "no closed form (inexact poles)");
    r.line("enclosure " + cball_text(v.value));
    series_check(
        r, v.value,
        [&] {
            return bilateral ? symmetric_partial_sum(a, b, st.N, st.prec) : unilateral_partial_sum(a, b, st.N, st.prec);
        },
        st.N);
}

// ---------------------------------------------------------------- beukers, pade

void beukers_cmd(Report& r, const Settings& st, const std::string& target, unsigned n, bool gap) {
    ZetaTarget t = parse_target(target);
    r.inputs = {{"target", target_name(t)}, {"n", n}, {"prec", st.prec}};
    BeukersCertificate c = beukers(t, n, st.prec);
    r.result = {{"target", target_name(t)}, {"n", n},           {"A", c.A.get_str()},        {"B", c.B.get_str()},
                {"d", c.d.get_str()},       {"I", ball_json(c.I)}, {"bound", ball_json(c.bound)}};
    unsigned e = target_exponent(t);
    r.line(std::string(target_name(t)) + ", n = " + std::to_string(n) + ": I = (A*" + target_name(t) + " + B)/d^" +
           std::to_string(e));
    r.line("A = " + c.A.get_str());
    r.line("B = " + c.B.get_str());
    r.line("d = " + c.d.get_str());
    r.line("I = " + ball_text(c.I));
    r.line("bound = " + ball_text(c.bound));
    r.check("integral", c.integral(), "d^" + std::to_string(e) + " clears the rational coefficients");
    r.check("within-bound", c.within_bound(), "|I| <= bound");
    r.check("nonzero", c.nonzero(), "I excludes 0");
    if (gap) {
        GapReport g = irrationality_gap_report(t, n, st.prec);
        json rows = json::array();
        for (const auto& row : g.rows) {
            rows.push_back({{"n", row.n},
                            {"product", ball_json(row.product)},
                            {"kpower", ball_json(row.kpower)},
                            {"margin", ball_json(row.margin)}});
            r.line("n = " + std::to_string(row.n) + "  |A zeta + B| = " + ball_text(row.product));
        }
        r.result["gap"] = {{"rows", rows}, {"rate", ball_json(g.rate)}};
        r.line("rate " + ball_text(g.rate));
        r.check("shrinking", g.shrinking() ? "pass" : "skipped", "rate below 1 at the last row");
    }
}

void pade_cmd(Report& r, const Settings& st, unsigned n, const std::string& x) {
    if (n < 1) throw UsageError("--n must be at least 1");
    Rat xq = parse_rat(x);
    r.inputs = {{"n", n}, {"x", rat_str(xq)}, {"prec", st.prec}};
    PadePair p = pade_exp(n);
    Ball xb(xq, st.prec);
    Ball rem = p.remainder(xb), bound = p.remainder_bound(xb);
    r.result = {{"n", n},
                {"T", poly_str(p.T)},
                {"P", poly_str(p.P)},
                {"Q", poly_str(p.Q)},
                {"remainder", ball_json(rem)},
                {"bound", ball_json(bound)}};
    r.line("T = " + poly_str(p.T));
    r.line("P = " + poly_str(p.P));
    r.line("Q = " + poly_str(p.Q));
    r.line("Q(x)e^x - P(x) = " + ball_text(rem));
    r.line("bound = " + ball_text(bound));
    r.check("remainder", certainly_le(rem.abs(), bound), "|Q e^x - P| <= n! |x|^(2n+1) e^|x| / (2n+1)!");
}

// ---------------------------------------------------------------- liouville

struct LiouvilleArgs {
    unsigned base = 10;
    std::string preperiod, period = "1";
    unsigned horizon = 10;
    std::string f;
    unsigned k = 2;
    std::string bits;
    unsigned length = 720;
};

LiouvilleNumber make_liouville(Report& r, const LiouvilleArgs& a) {
    if (a.base < 2) throw UsageError("--base must be at least 2");
    r.inputs["base"] = a.base;
    r.inputs["preperiod"] = a.preperiod;
    r.inputs["period"] = a.period;
    r.inputs["horizon"] = a.horizon;
    DigitRule rule = DigitRule::periodic(parse_digits(a.preperiod, a.base), parse_digits(a.period, a.base));
    return liouville_from_digits(a.base, rule, a.horizon);
}

void liouville_make(Report& r, const Settings& st, const LiouvilleArgs& a) {
    LiouvilleNumber x = make_liouville(r, a);
    Ball v = x.value(st.prec);
    r.result = {{"base", a.base}, {"digits", x.rule().describe()}, {"value", ball_json(v)}};
    r.line("x = sum m_j " + std::to_string(a.base) + "^(-j!), digits " + x.rule().describe());
    r.line("enclosure " + ball_text(v));
    bool all = true;
    for (unsigned k = 1; k <= a.horizon; ++k) all = all && x.check(k).ok();
    r.check("liouville-inequality", all, "0 < x - p_k/q_k < q_k^(-k) for k = 1.." + std::to_string(a.horizon));
}

void liouville_verify(Report& r, const Settings& st, const LiouvilleArgs& a) {
    LiouvilleNumber x = make_liouville(r, a);
    r.inputs["prec"] = st.prec;
    json rows = json::array();
    for (unsigned k = 1; k <= a.horizon; ++k) {
        LiouvilleCheck c = x.check(k);
        rows.push_back({{"k", k}, {"witness_index", c.witness_index}, {"positive", c.positive}, {"below", c.below}});
        r.line("k = " + std::to_string(k) + ": next nonzero digit at j = " + std::to_string(c.witness_index) +
               (c.ok() ? ", inequality holds" : ", inequality fails"));
        r.check("k=" + std::to_string(k), c.ok(), "exact comparison in base " + std::to_string(a.base));
    }
    r.result = {{"base", a.base}, {"digits", x.rule().describe()}, {"rows", rows}};
}

void liouville_poly_image_cmd(Report& r, const Settings& st, const LiouvilleArgs& a) {
    if (a.f.empty()) throw UsageError("--f is required");
    LiouvilleNumber x = make_liouville(r, a);
    r.inputs["f"] = a.f;
    r.inputs["k"] = a.k;
    r.inputs["prec"] = st.prec;
    QPoly f = parse_poly(a.f, "x");
    PolyImageWitness w = liouville_poly_image(x, f, a.k, st.prec);
    size_t bits = mpz_sizeinbase(w.C.get_mpz_t(), 2);
    r.result = {{"k", w.k},
                {"r", w.r},
                {"m", w.m},
                {"delta", rat_str(w.delta)},
                {"M", rat_str(w.M)},
                {"q_exponent", std::to_string(w.q_exponent)},
                {"base", w.base},
                {"C_bits", bits}};
    if (bits <= 4096) r.result["C"] = w.C.get_str();
    r.result["chain_ok"] = w.chain_ok;
    r.result["ball_ok"] = w.ball_ok ? json(*w.ball_ok) : json(nullptr);
    r.line("f(x) with f = " + poly_str(f) + ", k = " + std::to_string(a.k));
    r.line("convergent m = " + std::to_string(w.m) + ", q^r = " + std::to_string(w.base) + "^" +
           std::to_string(w.q_exponent));
    r.line("delta = " + rat_str(w.delta) + ", M = " + rat_str(w.M) + ", C has " + std::to_string(bits) + " bits");
    r.check("chain", w.chain_ok, "2^-m < delta, M 2^(kr) < 2^m, 0 < x - p/q < q^-m");
    if (w.ball_ok)
        r.check("direct-enclosure", *w.ball_ok, "|f(x) - C/q^r| against the Liouville bound");
    else
        r.check("direct-enclosure", "skipped", "q^r too large to expand");
}

void liouville_split_cmd(Report& r, const Settings& st, const LiouvilleArgs& a) {
    std::vector<std::uint8_t> bits;
    if (!a.bits.empty()) {
        for (unsigned d : parse_digits(a.bits, 2)) bits.push_back(static_cast<std::uint8_t>(d));
        r.inputs["bits"] = a.bits;
    } else {
        std::mt19937_64 rng(st.seed);
        for (unsigned j = 0; j < a.length; ++j) bits.push_back(static_cast<std::uint8_t>(rng() & 1));
        r.inputs["length"] = a.length;
        r.inputs["seed"] = std::to_string(st.seed);
    }
    SumSplit s = liouville_sum_split(bits);
    auto digits = [](const std::vector<std::uint8_t>& v) {
        std::string out;
        for (auto d : v) out += static_cast<char>('0' + d);
        return out;
    };
    json per_k = json::array();
    for (const auto& c : s.checks) {
        per_k.push_back({{"k", c.k}, {"within_horizon", c.within_horizon}, {"positive", c.positive}, {"bounded", c.bounded}});
        std::string name = "alpha-tail k=" + std::to_string(c.k);
        if (!c.within_horizon)
            r.check(name, "skipped", "beyond the given digits");
        else
            r.check(name, c.positive && c.bounded, "tail after the block is positive and below the Liouville bound");
    }
    r.result = {{"alpha", digits(s.alpha)}, {"beta", digits(s.beta)}, {"resums", s.resums}, {"checks", per_k}};
    r.line("x     = 0." + digits(bits));
    r.line("alpha = 0." + digits(s.alpha));
    r.line("beta  = 0." + digits(s.beta));
    r.check("resums", s.resums, "alpha_j + beta_j = x_j");
}

// ---------------------------------------------------------------- exppoly

struct ExpPolyArgs {
    std::string f, symbols = "s=1", R = "1";
};

void exppoly_inputs(Report& r, const Settings& st, const ExpPolyArgs& a) {
    if (a.f.empty()) throw UsageError("--f is required");
    r.inputs = {{"f", a.f}, {"symbols", a.symbols}, {"prec", st.prec}};
}

json exponents_json(const std::vector<Exponent>& es) {
    json out = json::array();
    for (const auto& e : es) out.push_back(rat_strs(e));
    return out;
}

void exppoly_support(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    ExpPoly f = ExpPoly::parse(a.f, parse_symbols(a.symbols));
    SupportInfo s = support_dim(f);
    r.result = {{"f", f.str()}, {"dim", s.dim}, {"basis", exponents_json(s.basis)}};
    r.line("f = " + f.str());
    r.line("support dimension " + std::to_string(s.dim));
    for (const auto& b : s.basis) r.line("basis " + exponent_str(f.symbols(), b));
}

void exppoly_simple(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    ExpPoly f = ExpPoly::parse(a.f, parse_symbols(a.symbols));
    bool s = is_simple(f);
    r.result = {{"f", f.str()}, {"simple", s}};
    r.line("f = " + f.str());
    r.line(s ? "simple" : "not simple");
}

void exppoly_ritt(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    ExpPoly f = ExpPoly::parse(a.f, parse_symbols(a.symbols));
    RittFactorization rf = ritt_factor_simple(f, st.prec);
    json factors = json::array();
    r.line("f = " + f.str());
    std::string mu0 = exponent_str(rf.symbols, rf.unit_exponent);
    r.line("unit " + (mu0 == "0" ? rf.unit_coeff.str() : "(" + rf.unit_coeff.str() + ")*exp((" + mu0 + ")*z)"));
    r.line("w = exp((" + exponent_str(rf.symbols, rf.rho) + ")*z)");
    for (const auto& fac : rf.factors) {
        if (fac.exact) {
            factors.push_back({{"exact", true}, {"alpha", fac.alpha.str()}});
            r.line("factor 1 - (" + fac.alpha.str() + ")*w");
        } else {
            factors.push_back({{"exact", false}, {"alpha", cball_json(fac.alpha_ball)}});
            r.line("factor 1 - (" + cball_text(fac.alpha_ball) + ")*w");
        }
    }
    json powers = json::array();
    for (long p : rf.powers) powers.push_back(p);
    r.result = {{"f", f.str()},
                {"unit_coeff", rf.unit_coeff.str()},
                {"unit_exponent", rat_strs(rf.unit_exponent)},
                {"rho", rat_strs(rf.rho)},
                {"powers", powers},
                {"factors", factors}};
    r.check("round-trip", ritt_roundtrip(f, rf, st.prec), "expanded product encloses every coefficient of f");
}

void exppoly_sindiv(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    r.inputs["seed"] = std::to_string(st.seed);
    ExpPoly f = ExpPoly::parse(a.f, parse_symbols(a.symbols));
    SinDivision d = divide_by_sin(f, st.prec, st.seed);
    std::ostringstream rad;
    rad << d.max_radius;
    r.result = {{"f", f.str()}, {"G", d.G.str()}, {"verified", d.verified}, {"max_radius", rad.str()}};
    r.line("f = " + f.str());
    r.line("f = sin(pi*z) * G with G = " + d.G.str());
    r.check("pointwise", d.verified, "f - sin(pi z) G at 16 seeded points, largest radius " + rad.str());
}

Ball parse_radius(const std::string& R, long prec) {
    Ball b = enclose(ClosedForm::parse(R), prec);
    if (!b.positive()) throw UsageError("--R must be positive");
    return b;
}

void exppoly_bounds(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    r.inputs["R"] = a.R;
    PolyExpPoly f = PolyExpPoly::parse(a.f, parse_symbols(a.symbols));
    Ball R = parse_radius(a.R, st.prec);
    long plain = complex_zero_bound(f, R, false), sharp = complex_zero_bound(f, R, true);
    r.result = {{"f", f.str()}, {"R", a.R}, {"plain", plain}, {"sharp", sharp}};
    r.line("f = " + f.str());
    try {
        unsigned long real = real_zero_bound(f);
        r.result["real"] = real;
        r.line("real zeros at most " + std::to_string(real));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Precondition) throw;
        r.result["real"] = nullptr;
        r.line("real bound not applicable (complex data)");
    }
    r.line("zeros in |z| <= " + a.R + " at most " + std::to_string(plain) + " (sharp " + std::to_string(sharp) + ")");
}

void exppoly_count(Report& r, const Settings& st, const ExpPolyArgs& a) {
    exppoly_inputs(r, st, a);
    r.inputs["R"] = a.R;
    PolyExpPoly f = PolyExpPoly::parse(a.f, parse_symbols(a.symbols));
    Ball R = parse_radius(a.R, st.prec);
    long n = count_zeros_numeric(f, R, st.prec);
    long plain = complex_zero_bound(f, R, false);
    r.result = {{"f", f.str()}, {"R", a.R}, {"count", n}, {"plain", plain}};
    r.line("f = " + f.str());
    r.line("zeros in |z| < " + a.R + ": " + std::to_string(n));
    r.check("bound", n <= plain, "count <= " + std::to_string(plain));
}

// ---------------------------------------------------------------- ering

BaseExp parse_mode(const std::string& m) {
    if (m == "trivial") return BaseExp::Trivial;
    if (m == "free") return BaseExp::Free;
    throw UsageError("--mode must be trivial or free");
}

void ering_normalize(Report& r, const Settings&, const std::string& expr, const std::string& mode) {
    r.inputs = {{"expr", expr}, {"mode", mode}};
    BaseExp m = parse_mode(mode);
    ETowerElem e = parse_elem(expr, m);
    r.result = {{"normal_form", e.str()}, {"height", e.height()}, {"terms", e.size()}, {"unit", e.is_unit()}};
    r.line(e.str());
    r.line("height " + std::to_string(e.height()) + ", " + std::to_string(e.size()) + " terms");
    r.check("round-trip", parse_elem(e.str(), m) == e, "the printed form parses back to the same normal form");
}

void ering_eval(Report& r, const Settings& st, const std::string& expr, const std::string& mode,
                const std::string& point) {
    r.inputs = {{"expr", expr}, {"mode", mode}, {"point", point}, {"prec", st.prec}};
    ETowerElem e = parse_elem(expr, parse_mode(mode));
    std::vector<CBall> pt;
    std::stringstream ss(point);
    std::string part;
    while (std::getline(ss, part, ',')) pt.emplace_back(ExactScalar::parse(part), st.prec);
    CBall v = gamma_eval(e, pt, st.prec);
    r.result = {{"normal_form", e.str()}, {"value", cball_json(v)}};
    r.line(e.str());
    r.line("Gamma = " + cball_text(v));
}

// ---------------------------------------------------------------- rank, siegel

json independence_json(const Independence& ind) {
    return {{"independent", ind.independent}, {"relation", int_strs(ind.relation)}};
}

std::string independence_text(const std::string& what, const Independence& ind) {
    if (ind.independent) return what + " independent over Q";
    return what + " dependent, relation " + tuple_str(int_strs(ind.relation));
}

void rank_independence(Report& r, const Settings&, const std::string& matrix) {
    r.inputs = {{"matrix", json::parse(matrix)}};
    LinFormMatrix M = parse_matrix_json(matrix);
    std::vector<std::vector<Rat>> rows, cols;
    for (size_t i = 0; i < M.m(); ++i) rows.push_back(M.row_vector(i));
    for (size_t j = 0; j < M.n(); ++j) cols.push_back(M.column_vector(j));
    Independence ri = q_independence(rows), ci = q_independence(cols);
    r.result = {{"rows", independence_json(ri)}, {"columns", independence_json(ci)}};
    r.line(independence_text("rows", ri));
    r.line(independence_text("columns", ci));
}

void rank_generic(Report& r, const Settings& st, const std::string& matrix) {
    r.inputs = {{"matrix", json::parse(matrix)}, {"seed", std::to_string(st.seed)}};
    LinFormMatrix M = parse_matrix_json(matrix);
    GenericRank g = generic_rank(M, st.seed);
    r.result = {{"rank", g.rank},
                {"minor_rows", g.minor_rows},
                {"minor_cols", g.minor_cols},
                {"minor_det", g.minor_det.get_str()},
                {"point", int_strs(g.point)},
                {"criterion_bound", rat_str(g.criterion_bound)},
                {"exceeds_bound", Rat(static_cast<long>(g.rank)) > g.criterion_bound}};
    r.line("generic rank " + std::to_string(g.rank) + " (mn/(m+n) = " + rat_str(g.criterion_bound) + ")");
    r.line("nonsingular minor rows " + tuple_str([&] {
               std::vector<std::string> v;
               for (auto i : g.minor_rows) v.push_back(std::to_string(i));
               return v;
           }()) + " columns " + tuple_str([&] {
               std::vector<std::string> v;
               for (auto j : g.minor_cols) v.push_back(std::to_string(j));
               return v;
           }()));
    r.check("substitution", substituted_rank(M, g.point) == g.rank, "exact rank at the substituted primes");
}

void rank_six_exp(Report& r, const Settings&, const std::string& matrix) {
    r.inputs = {{"matrix", json::parse(matrix)}};
    LinFormMatrix M = parse_matrix_json(matrix);
    SixExpReport s = six_exp_verdict(M);
    r.result = {{"verdict", verdict_name(s.verdict)},
                {"rows", independence_json(s.rows)},
                {"columns", independence_json(s.cols)},
                {"failed", s.failed},
                {"asserted_rank", s.asserted_rank},
                {"conjectural", s.conjectural},
                {"note", s.note}};
    r.line("verdict " + verdict_name(s.verdict));
    if (!s.failed.empty()) r.line("hypotheses fail on the " + s.failed);
    if (!s.note.empty()) r.line(s.note);
}

void siegel_cmd(Report& r, const Settings&, const std::string& matrix) {
    r.inputs = {{"matrix", json::parse(matrix)}};
    IntMatrix C = parse_int_matrix_json(matrix);
    SiegelSolution s = siegel_solve(C);
    r.result = {{"x", int_strs(s.x)}, {"bound", s.bound.get_str()}, {"c0", s.c0.get_str()}, {"visited", s.visited}};
    r.line(tuple_str(int_strs(s.x)));
    r.line("bound " + s.bound.get_str());
    bool ok = false;
    for (const auto& x : s.x) ok = ok || x != 0;
    for (const auto& x : s.x) ok = ok && abs(x) <= s.bound;
    for (const auto& row : C) {
        Int dot = 0;
        for (size_t j = 0; j < row.size(); ++j) dot += row[j] * s.x[j];
        ok = ok && dot == 0;
    }
    r.check("solution", ok, "nonzero, C x = 0, max |x_j| <= bound");
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return kExitUsage;
        case ErrorKind::Internal: return kExitInternal;
        default: return kExitDomain;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"translab: exact and certified computations in transcendental number theory"};
    app.require_subcommand(1);
    Settings st;
    if (const char* env = std::getenv("TRANSLAB_PREC")) {
        try {
            st.prec = std::stol(env);
        } catch (const std::exception&) {
            std::cerr << "translab: TRANSLAB_PREC is not an integer\n";
            return kExitUsage;
        }
    }
    app.add_option("--prec", st.prec, "working precision in bits (>= 64)");
    app.add_option("-N,--terms", st.N, "truncation for series checks (>= 10)");
    app.add_option("--seed", st.seed, "seed for randomized steps");
    app.add_flag("--json", st.json, "JSON report");

    Report report;
    std::function<void()> action;
    auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    unsigned even = 0, odd = 0;
    auto* zeta = sub(&app, "zeta", "zeta(2n) in closed form or zeta(2n+1) by conjugate Bernoulli numbers");
    zeta->add_option("--even", even, "n for zeta(2n)");
    zeta->add_option("--odd", odd, "n for zeta(2n+1)");
    zeta->callback([&] { action = [&] { zeta_cmd(report, st, even, odd); }; });

    std::string A = "1", B, P, z;
    bool bilateral = false, unilateral = false, power = false;
    auto* sum = sub(&app, "sum", "rational series over Z or n >= 0, and sum z^n P(n)");
    sum->add_option("--A", A, "numerator polynomial in n");
    sum->add_option("--B", B, "denominator polynomial in n");
    sum->add_option("--P", P, "polynomial for --power");
    sum->add_option("--z", z, "Gaussian rational with |z| < 1 for --power");
    sum->add_flag("--bilateral", bilateral);
    sum->add_flag("--unilateral", unilateral);
    sum->add_flag("--power", power);
    sum->callback([&] { action = [&] { sum_cmd(report, st, A, B, P, z, bilateral, unilateral, power); }; });

    std::string target;
    unsigned bn = 0;
    bool gap = false;
    auto* beuk = sub(&app, "beukers", "integer certificate I_n = (A zeta + B)/d_n^e");
    beuk->add_option("--target", target, "zeta2 or zeta3")->required();
    beuk->add_option("--n", bn, "index n")->required();
    beuk->add_flag("--gap", gap, "also report |A zeta + B| for every index up to n");
    beuk->callback([&] { action = [&] { beukers_cmd(report, st, target, bn, gap); }; });

    unsigned pn = 0;
    std::string px = "1";
    auto* pade = sub(&app, "pade", "Q_n(x) e^x - P_n(x) and its bound");
    pade->add_option("--n", pn, "order n >= 1")->required();
    pade->add_option("--x", px, "rational point");
    pade->callback([&] { action = [&] { pade_cmd(report, st, pn, px); }; });

    LiouvilleArgs la;
    auto* liou = sub(&app, "liouville", "Liouville numbers sum m_j b^(-j!)");
    liou->require_subcommand(1);
    auto liouville_common = [&](CLI::App* s) {
        s->add_option("--base", la.base, "base b >= 2");
        s->add_option("--preperiod", la.preperiod, "digits before the period, e.g. 12 or 3,11");
        s->add_option("--period", la.period, "repeating digits");
        s->add_option("--horizon", la.horizon, "largest k checked");
    };
    auto* lmake = sub(liou, "make", "build and enclose x");
    liouville_common(lmake);
    lmake->callback([&] { action = [&] { liouville_make(report, st, la); }; });
    auto* lverify = sub(liou, "verify", "check 0 < x - p_k/q_k < q_k^(-k) exactly");
    liouville_common(lverify);
    lverify->callback([&] { action = [&] { liouville_verify(report, st, la); }; });
    auto* limage = sub(liou, "poly-image", "witness that f(x) satisfies the Liouville inequality at k");
    liouville_common(limage);
    limage->add_option("--f", la.f, "polynomial in x with rational coefficients");
    limage->add_option("--k", la.k, "exponent k");
    limage->callback([&] { action = [&] { liouville_poly_image_cmd(report, st, la); }; });
    auto* lsplit = sub(liou, "split", "write a binary number as a sum of two Liouville numbers");
    lsplit->add_option("--bits", la.bits, "binary digits x_1 x_2 ...");
    lsplit->add_option("--length", la.length, "number of seeded random digits when --bits is absent");
    lsplit->callback([&] { action = [&] { liouville_split_cmd(report, st, la); }; });

    ExpPolyArgs ea;
    auto* ep = sub(&app, "exppoly", "exponential polynomials sum c exp(mu z)");
    ep->require_subcommand(1);
    auto ep_sub = [&](const std::string& name, const std::string& help, bool radius,
                      void (*fn)(Report&, const Settings&, const ExpPolyArgs&)) {
        auto* s = sub(ep, name, help);
        s->add_option("--f", ea.f, "e.g. \"exp(2*s*z)-1\"");
        s->add_option("--symbols", ea.symbols, "exponent symbols, e.g. s=1,p=pi*i");
        if (radius) s->add_option("--R", ea.R, "radius, a closed form such as 7 or 2*pi");
        s->callback([&, fn] { action = [&, fn] { fn(report, st, ea); }; });
    };
    ep_sub("support", "dimension of the Q-span of the exponents", false, exppoly_support);
    ep_sub("simple", "whether the exponents lie on one line through 0 with rational ratios", false, exppoly_simple);
    ep_sub("ritt", "factor a simple f as unit * prod (1 - alpha exp(rho z))", false, exppoly_ritt);
    ep_sub("sindiv", "divide f vanishing at the integers by sin(pi z)", false, exppoly_sindiv);
    ep_sub("bounds", "zero-count bounds on the real line and in |z| <= R", true, exppoly_bounds);
    ep_sub("count", "certified winding number on |z| = R", true, exppoly_count);

    std::string expr, mode = "trivial", point;
    auto* er = sub(&app, "ering", "the free E-ring over Z[X1..Xn]");
    er->require_subcommand(1);
    auto* enorm = sub(er, "normalize", "normal form of an expression");
    enorm->add_option("--expr", expr, "e.g. \"(1+E(X))*(1-E(X))\"")->required();
    enorm->add_option("--mode", mode, "trivial or free exponentiation of integers");
    enorm->callback([&] { action = [&] { ering_normalize(report, st, expr, mode); }; });
    auto* eeval = sub(er, "eval", "evaluate with X_k at complex points and E = exp");
    eeval->add_option("--expr", expr, "expression")->required();
    eeval->add_option("--mode", mode, "trivial or free");
    eeval->add_option("--point", point, "comma-separated Gaussian rationals, e.g. 1/10,2+i")->required();
    eeval->callback([&] { action = [&] { ering_eval(report, st, expr, mode, point); }; });

    std::string matrix;
    auto* rk = sub(&app, "rank", "matrices of Q-linear forms");
    rk->require_subcommand(1);
    auto rank_sub = [&](const std::string& name, const std::string& help,
                        void (*fn)(Report&, const Settings&, const std::string&)) {
        auto* s = sub(rk, name, help);
        s->add_option("--matrix", matrix, "JSON {symbols, rows} or @file")->required();
        s->callback([&, fn] { action = [&, fn] { fn(report, st, read_arg(matrix)); }; });
    };
    rank_sub("independence", "Q-linear independence of rows and columns", rank_independence);
    rank_sub("generic", "rank with the symbols algebraically independent", rank_generic);
    rank_sub("six-exp", "six exponentials criterion", rank_six_exp);

    auto* sg = sub(&app, "siegel", "small nonzero integer solution of C x = 0");
    sg->add_option("--matrix", matrix, "integer matrix as JSON, e.g. [[1,2]], or @file")->required();
    sg->callback([&] { action = [&] { siegel_cmd(report, st, read_arg(matrix)); }; });

    bool selftest = false;
    auto* stc = sub(&app, "selftest", "run the acceptance criteria");
    stc->callback([&] { selftest = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (st.prec < 64) {
        std::cerr << "translab: precision must be at least 64 bits\n";
        return kExitUsage;
    }
    if (st.N < 10) {
        std::cerr << "translab: N must be at least 10\n";
        return kExitUsage;
    }
    if (selftest) return run_selftest(st.seed, st.json, std::cout, std::cerr) == 0 ? kExitOk : kExitInternal;

    std::string command;
    for (CLI::App* s = app.get_subcommands().front(); s;) {
        command += (command.empty() ? "" : " ") + s->get_name();
        auto subs = s->get_subcommands();
        s = subs.empty() ? nullptr : subs.front();
    }
    report.command = command;

    auto fail_with = [&](const std::string& kind, const std::string& msg, int code) {
        if (st.json) {
            json j = {{"command", command}, {"inputs", report.inputs}, {"error", {{"kind", kind}, {"message", msg}}}};
            std::cout << j.dump(2) << '\n';
        }
        std::cerr << "translab: " << kind << ": " << msg << '\n';
        return code;
    };
    try {
        action();
    } catch (const UsageError& e) {
        return fail_with("usage", e.what(), kExitUsage);
    } catch (const Error& e) {
        return fail_with(error_kind_name(e.kind()), e.what(), exit_code_for(e.kind()));
    } catch (const json::exception& e) {
        return fail_with("parse", e.what(), kExitUsage);
    } catch (const std::exception& e) {
        return fail_with("internal", e.what(), kExitInternal);
    }
    report.print(st.json, std::cout);
    return report.failed ? kExitInternal : kExitOk;
}
