#pragma once

#include "translab/scalar.hpp"

#include <vector>

namespace translab {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

// each row scaled by the lcm of its denominators
IntMatrix clear_row_denominators(const RatMatrix& m);

// fraction-free elimination with gcd reduction; returns the rank and the indices of a
// maximal independent set of rows, chosen greedily in input order
struct RankInfo {
    size_t rank = 0;
    std::vector<size_t> independent_rows;
};
RankInfo fraction_free_rank(const IntMatrix& m);
RankInfo rational_rank(const RatMatrix& m);

// basis of the right kernel {x : m x = 0}, each vector integral and primitive
std::vector<std::vector<Int>> integer_kernel(const RatMatrix& m);

Int determinant(const IntMatrix& m);  // Bareiss, square input

}  // namespace translab
