#pragma once

#include "translab/ball.hpp"
#include "translab/poly.hpp"

#include <vector>

namespace translab {

struct RootEnclosure {
    CBall z;                    // box certified to contain exactly one distinct root
    unsigned multiplicity = 1;
};

struct ExactRoot {
    ExactScalar value;
    unsigned multiplicity = 1;
};

// All complex roots of p (degree >= 1), grouped by square-free factor. Each box
// holds exactly one root of its square-free factor, and boxes of the same
// factor are pairwise disjoint.
std::vector<RootEnclosure> isolate_roots(const GPoly& p, long prec);
std::vector<RootEnclosure> isolate_roots(const QPoly& p, long prec);

// Roots lying in Q(i), with multiplicities; every value is verified exactly.
// `rest` receives the cofactor carrying the remaining roots (monic).
std::vector<ExactRoot> gaussian_rational_roots(const GPoly& p, GPoly* rest = nullptr);
std::vector<ExactRoot> gaussian_rational_roots(const QPoly& p, GPoly* rest = nullptr);

// simplest rational in [lo, hi] (smallest denominator, then smallest |numerator|)
Rat simplest_rational(const Rat& lo, const Rat& hi);

CBall midpoint(const CBall& z);
Ball midpoint(const Ball& x);

}  // namespace translab
