#include "translab/linalg.hpp"

#include "translab/error.hpp"

namespace translab {

IntMatrix clear_row_denominators(const RatMatrix& m) {
    IntMatrix out;
    for (const auto& row : m) {
        Int l = 1;
        for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> r;
        for (const auto& q : row) r.push_back(q.get_num() * (l / q.get_den()));
        out.push_back(std::move(r));
    }
    return out;
}

RankInfo fraction_free_rank(const IntMatrix& m) {
    RankInfo info;
    if (m.empty()) return info;
    size_t cols = m[0].size();
    // rows are inserted one at a time into an echelon basis kept fraction-free
    std::vector<std::vector<Int>> basis;
    std::vector<size_t> pivot_col;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols) fail(ErrorKind::Shape, "ragged matrix");
        std::vector<Int> v = m[i];
        for (size_t b = 0; b < basis.size(); ++b) {
            size_t c = pivot_col[b];
            if (sgn(v[c]) == 0) continue;
            Int f = v[c], p = basis[b][c];
            for (size_t k = 0; k < cols; ++k) v[k] = v[k] * p - basis[b][k] * f;
            Int g = 0;
            for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1)
                for (auto& x : v) x /= g;
        }
        size_t c = 0;
        while (c < cols && sgn(v[c]) == 0) ++c;
        if (c == cols) continue;
        basis.push_back(std::move(v));
        pivot_col.push_back(c);
        info.independent_rows.push_back(i);
    }
    info.rank = basis.size();
    return info;
}

RankInfo rational_rank(const RatMatrix& m) { return fraction_free_rank(clear_row_denominators(m)); }

std::vector<std::vector<Int>> integer_kernel(const RatMatrix& m) {
    IntMatrix a = clear_row_denominators(m);
    if (a.empty()) return {};
    size_t rows = a.size(), cols = a[0].size();
    // reduced row echelon form over Q, kept as rationals for clarity
    std::vector<std::vector<Rat>> r(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) r[i][j] = Rat(a[i][j]);
    std::vector<long> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t c = 0; c < cols && row < rows; ++c) {
        size_t p = row;
        while (p < rows && sgn(r[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(r[p], r[row]);
        Rat inv = 1 / r[row][c];
        for (auto& x : r[row]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(r[i][c]) == 0) continue;
            Rat f = r[i][c];
            for (size_t k = 0; k < cols; ++k) r[i][k] -= f * r[row][k];
        }
        pivot_of_col[c] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<Int>> out;
    for (size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free] = 1;
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -r[static_cast<size_t>(pivot_of_col[c])][free];
        Int l = 1;
        for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> w;
        Int g = 0;
        for (const auto& q : v) {
            w.push_back(q.get_num() * (l / q.get_den()));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.back().get_mpz_t());
        }
        for (auto& x : w) x /= g;
        out.push_back(std::move(w));
    }
    return out;
}

Int determinant(const IntMatrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) fail(ErrorKind::Shape, "determinant needs a square matrix");
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace translab
