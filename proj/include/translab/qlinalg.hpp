#pragma once

#include "translab/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace translab {

// m x n matrix whose entries are Q-linear forms in formal symbols
struct LinFormMatrix {
    std::vector<std::string> symbols;
    std::vector<std::vector<std::vector<Rat>>> rows;  // rows[i][j][k]: coefficient of symbols[k]
    size_t m() const { return rows.size(); }
    size_t n() const { return rows.empty() ? 0 : rows[0].size(); }
    // row i (or column j) flattened to a vector in Q^{n s} (or Q^{m s})
    std::vector<Rat> row_vector(size_t i) const;
    std::vector<Rat> column_vector(size_t j) const;
    void validate() const;
    std::string entry_str(size_t i, size_t j) const;
};

// {"symbols": [...], "rows": [[["p/q", ...], ...], ...]}
LinFormMatrix parse_matrix_json(const std::string& text);
// "[[1,2],[3,4]]"
IntMatrix parse_int_matrix_json(const std::string& text);

struct Independence {
    bool independent = true;
    std::vector<Int> relation;  // sum relation[i] v_i = 0, first nonzero entry positive
};
Independence q_independence(const std::vector<std::vector<Rat>>& vectors);

struct GenericRank {
    size_t rank = 0;
    std::vector<size_t> minor_rows, minor_cols;  // a minor nonsingular at `point`
    Int minor_det;
    std::vector<Int> point;  // substituted value of each symbol
    Rat criterion_bound;     // mn / (m + n)
};

// rank over Q(symbols) with the symbols algebraically independent
GenericRank generic_rank(const LinFormMatrix& M, std::uint64_t seed = 20240601, unsigned trials = 3);
// rank of M with the symbols replaced by the given integers
size_t substituted_rank(const LinFormMatrix& M, const std::vector<Int>& point);

enum class SixExpVerdict { HypothesesFail, TheoremApplies, ConjectureWouldAssert };
std::string verdict_name(SixExpVerdict v);

struct SixExpReport {
    SixExpVerdict verdict = SixExpVerdict::HypothesesFail;
    Independence rows, cols;
    std::string failed;  // "rows" or "columns" when hypotheses fail
    size_t asserted_rank = 0;
    bool conjectural = false;
    std::string note;
};
SixExpReport six_exp_verdict(const LinFormMatrix& M);

struct SiegelSolution {
    std::vector<Int> x;
    Int bound;  // floor((n C0)^{m/(n-m)})
    Int c0;
    unsigned long visited = 0;
};
SiegelSolution siegel_solve(const IntMatrix& C);
Int siegel_bound(size_t m, size_t n, const Int& c0);

}  // namespace translab
