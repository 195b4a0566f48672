#include "translab/qlinalg.hpp"

#include "translab/error.hpp"

#include <json.hpp>

#include <random>

namespace translab {

namespace {

Rat json_rat(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    fail(ErrorKind::Parse, "matrix entries must be integers or \"p/q\" strings");
}

Int json_int(const nlohmann::json& v) {
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        Rat q = parse_rat(v.get<std::string>());
        if (q.get_den() != 1) fail(ErrorKind::Parse, "integer matrix entry expected");
        return q.get_num();
    }
    fail(ErrorKind::Parse, "integer matrix entry expected");
}

nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
}

std::vector<Int> normalize_sign(std::vector<Int> v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// value at odometer digit t: 0, 1, -1, 2, -2, ...
long odometer_value(long t) { return t == 0 ? 0 : (t % 2 ? (t + 1) / 2 : -(t / 2)); }

}  // namespace

std::vector<Rat> LinFormMatrix::row_vector(size_t i) const {
    std::vector<Rat> v;
    for (const auto& e : rows[i]) v.insert(v.end(), e.begin(), e.end());
    return v;
}

std::vector<Rat> LinFormMatrix::column_vector(size_t j) const {
    std::vector<Rat> v;
    for (const auto& r : rows) v.insert(v.end(), r[j].begin(), r[j].end());
    return v;
}

void LinFormMatrix::validate() const {
    if (rows.empty()) fail(ErrorKind::Shape, "matrix has no rows");
    for (const auto& r : rows) {
        if (r.size() != n() || r.empty()) fail(ErrorKind::Shape, "ragged matrix");
        for (const auto& e : r)
            if (e.size() != symbols.size()) fail(ErrorKind::Shape, "entry length differs from symbol count");
    }
}

std::string LinFormMatrix::entry_str(size_t i, size_t j) const {
    std::string s;
    const auto& e = rows[i][j];
    for (size_t k = 0; k < e.size(); ++k) {
        if (sgn(e[k]) == 0) continue;
        Rat a = abs(e[k]);
        if (sgn(e[k]) < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (a != 1) s += rat_str(a) + "*";
        s += symbols[k];
    }
    return s.empty() ? "0" : s;
}

LinFormMatrix parse_matrix_json(const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_object() || !j.contains("symbols") || !j.contains("rows"))
        fail(ErrorKind::Parse, "matrix JSON needs \"symbols\" and \"rows\"");
    LinFormMatrix M;
    for (const auto& s : j["symbols"]) {
        if (!s.is_string()) fail(ErrorKind::Parse, "symbol names must be strings");
        M.symbols.push_back(s.get<std::string>());
    }
    for (const auto& r : j["rows"]) {
        if (!r.is_array()) fail(ErrorKind::Parse, "each row must be an array");
        std::vector<std::vector<Rat>> row;
        for (const auto& e : r) {
            if (!e.is_array()) fail(ErrorKind::Parse, "each entry must be a coefficient array");
            std::vector<Rat> v;
            for (const auto& q : e) v.push_back(json_rat(q));
            row.push_back(std::move(v));
        }
        M.rows.push_back(std::move(row));
    }
    M.validate();
    return M;
}

IntMatrix parse_int_matrix_json(const std::string& text) {
    nlohmann::json j = parse_json(text);
    if (!j.is_array() || j.empty()) fail(ErrorKind::Parse, "matrix must be a nonempty array of rows");
    IntMatrix C;
    for (const auto& r : j) {
        if (!r.is_array()) fail(ErrorKind::Parse, "each row must be an array");
        std::vector<Int> row;
        for (const auto& e : r) row.push_back(json_int(e));
        C.push_back(std::move(row));
    }
    return C;
}

Independence q_independence(const std::vector<std::vector<Rat>>& vectors) {
    Independence out;
    if (vectors.empty()) return out;
    size_t dim = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != dim) fail(ErrorKind::Shape, "vectors of different lengths");
    // columns are the vectors, so kernel elements are relations
    RatMatrix A(dim, std::vector<Rat>(vectors.size()));
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t k = 0; k < dim; ++k) A[k][i] = vectors[i][k];
    if (dim == 0) {
        out.independent = false;
        out.relation.assign(vectors.size(), Int(0));
        out.relation[0] = 1;
        return out;
    }
    auto ker = integer_kernel(A);
    if (ker.empty()) return out;
    out.independent = false;
    out.relation = normalize_sign(ker.front());
    return out;
}

size_t substituted_rank(const LinFormMatrix& M, const std::vector<Int>& point) {
    RatMatrix A(M.m(), std::vector<Rat>(M.n()));
    for (size_t i = 0; i < M.m(); ++i)
        for (size_t j = 0; j < M.n(); ++j) {
            Rat v = 0;
            for (size_t k = 0; k < point.size(); ++k) v += M.rows[i][j][k] * Rat(point[k]);
            A[i][j] = v;
        }
    return rational_rank(A).rank;
}

GenericRank generic_rank(const LinFormMatrix& M, std::uint64_t seed, unsigned trials) {
    M.validate();
    std::mt19937_64 rng(seed);
    GenericRank best;
    best.criterion_bound = Rat(static_cast<long>(M.m() * M.n()), static_cast<long>(M.m() + M.n()));
    bool have = false;
    for (unsigned t = 0; t < std::max(1u, trials); ++t) {
        // a minor that is nonzero at a point is a nonzero polynomial, so the rank at any
        // substitution never exceeds the generic rank; equality fails only if every maximal
        // generic minor vanishes at the point, which random primes >= 2^61 make improbable
        std::vector<Int> point;
        for (size_t k = 0; k < M.symbols.size(); ++k) {
            Int p = (Int(1) << 61) + Int(std::to_string(rng() >> 4));
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            point.push_back(p);
        }
        RatMatrix A(M.m(), std::vector<Rat>(M.n()));
        for (size_t i = 0; i < M.m(); ++i)
            for (size_t j = 0; j < M.n(); ++j) {
                Rat v = 0;
                for (size_t k = 0; k < point.size(); ++k) v += M.rows[i][j][k] * Rat(point[k]);
                A[i][j] = v;
            }
        IntMatrix I = clear_row_denominators(A);
        RankInfo rows = fraction_free_rank(I);
        if (have && rows.rank <= best.rank) continue;
        // independent columns inside the chosen rows
        IntMatrix T(M.n(), std::vector<Int>(rows.rank));
        for (size_t a = 0; a < rows.rank; ++a)
            for (size_t j = 0; j < M.n(); ++j) T[j][a] = I[rows.independent_rows[a]][j];
        RankInfo cols = fraction_free_rank(T);
        IntMatrix minor(rows.rank, std::vector<Int>(rows.rank));
        for (size_t a = 0; a < rows.rank; ++a)
            for (size_t b = 0; b < rows.rank; ++b) minor[a][b] = I[rows.independent_rows[a]][cols.independent_rows[b]];
        Int det = determinant(minor);
        if (rows.rank > 0 && det == 0) fail(ErrorKind::Internal, "selected minor is singular");
        best.rank = rows.rank;
        best.minor_rows = rows.independent_rows;
        best.minor_cols = cols.independent_rows;
        best.minor_det = det;
        best.point = point;
        have = true;
    }
    return best;
}

std::string verdict_name(SixExpVerdict v) {
    switch (v) {
        case SixExpVerdict::HypothesesFail: return "hypotheses-fail";
        case SixExpVerdict::TheoremApplies: return "theorem-applies";
        case SixExpVerdict::ConjectureWouldAssert: return "conjecture-4EC-would-assert";
    }
    return "unknown";
}

SixExpReport six_exp_verdict(const LinFormMatrix& M) {
    M.validate();
    size_t m = M.m(), n = M.n();
    bool six = (m == 2 && n == 3) || (m == 3 && n == 2);
    bool four = m == 2 && n == 2;
    if (!six && !four) fail(ErrorKind::Shape, "six exponentials needs a 2x3, 3x2 or 2x2 matrix");
    SixExpReport r;
    std::vector<std::vector<Rat>> rv, cv;
    for (size_t i = 0; i < m; ++i) rv.push_back(M.row_vector(i));
    for (size_t j = 0; j < n; ++j) cv.push_back(M.column_vector(j));
    r.rows = q_independence(rv);
    r.cols = q_independence(cv);
    if (!r.rows.independent || !r.cols.independent) {
        r.verdict = SixExpVerdict::HypothesesFail;
        r.failed = !r.rows.independent ? "rows" : "columns";
        r.note = r.failed + " are linearly dependent over Q";
        return r;
    }
    r.asserted_rank = 2;
    if (six) {
        r.verdict = SixExpVerdict::TheoremApplies;
        r.note = "mn = " + std::to_string(m * n) + " > m + n = " + std::to_string(m + n) + "; rank >= 2";
    } else {
        r.verdict = SixExpVerdict::ConjectureWouldAssert;
        r.conjectural = true;
        r.note = "conjectural: the four exponentials conjecture would give rank 2; not a theorem";
    }
    return r;
}

Int siegel_bound(size_t m, size_t n, const Int& c0) {
    if (n <= m) fail(ErrorKind::Precondition, "Siegel's lemma needs more unknowns than equations");
    Int base = Int(static_cast<unsigned long>(n)) * c0, p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), m);
    Int b;
    mpz_root(b.get_mpz_t(), p.get_mpz_t(), n - m);
    return b;
}

SiegelSolution siegel_solve(const IntMatrix& C) {
    size_t m = C.size();
    if (m == 0) fail(ErrorKind::Shape, "empty system");
    size_t n = C[0].size();
    for (const auto& r : C)
        if (r.size() != n) fail(ErrorKind::Shape, "ragged matrix");
    if (n <= m) fail(ErrorKind::Precondition, "Siegel's lemma needs n > m");
    SiegelSolution out;
    out.c0 = 0;
    for (const auto& r : C)
        for (const auto& c : r)
            if (abs(c) > out.c0) out.c0 = abs(c);
    if (out.c0 == 0) fail(ErrorKind::Precondition, "all coefficients are zero");
    out.bound = siegel_bound(m, n, out.c0);
    if (out.c0 > (1L << 30) || !out.bound.fits_slong_p() || out.bound > 100000)
        fail(ErrorKind::Precondition, "search box too large for exhaustive search");
    std::vector<std::vector<long>> c(m, std::vector<long>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) c[i][j] = C[i][j].get_si();
    long B = out.bound.get_si();
    const unsigned long budget = 4000000000UL;
    std::vector<long> digit(n), x(n);
    for (long h = 1; h <= B; ++h) {
        std::fill(digit.begin(), digit.end(), 0);
        while (true) {
            bool on_shell = false;
            for (size_t j = 0; j < n; ++j) {
                x[j] = odometer_value(digit[j]);
                if (x[j] == h || x[j] == -h) on_shell = true;
            }
            if (on_shell) {
                if (++out.visited > budget) fail(ErrorKind::Precondition, "search budget exhausted");
                bool zero = true;
                for (size_t i = 0; i < m && zero; ++i) {
                    __int128 s = 0;
                    for (size_t j = 0; j < n; ++j) s += static_cast<__int128>(c[i][j]) * x[j];
                    zero = s == 0;
                }
                if (zero) {
                    for (long v : x) out.x.push_back(Int(v));
                    out.x = normalize_sign(out.x);
                    return out;
                }
            }
            size_t k = 0;
            while (k < n && digit[k] == 2 * h) digit[k++] = 0;
            if (k == n) break;
            ++digit[k];
        }
    }
    fail(ErrorKind::Internal, "no solution inside the Siegel box; this contradicts the lemma");
}

}  // namespace translab
