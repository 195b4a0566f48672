#pragma once

// Seeded random instances shared by the property tests and the acceptance suite.

#include "translab/ering.hpp"
#include "translab/exppoly.hpp"
#include "translab/linalg.hpp"

#include <random>

namespace gen {

using namespace translab;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat small_rat(std::mt19937_64& rng, long num, long den) {
    return rat(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline ExactScalar small_gaussian(std::mt19937_64& rng, long bound) {
    ExactScalar c;
    do {
        c = ExactScalar(Rat(uniform(rng, -bound, bound)), Rat(uniform(rng, -bound, bound)));
    } while (c.is_zero());
    return c;
}

// symbols one = 1 and im = i, so an exponent (a, b) is a + b i
inline SymbolList complex_plane_symbols() { return parse_symbols("one=1,im=i"); }

// n <= 3 terms, degrees <= 2, distinct exponents with |mu| <= 2 over complex_plane_symbols
inline PolyExpPoly random_poly_exp(std::mt19937_64& rng, bool real) {
    SymbolList syms = complex_plane_symbols();
    long n = uniform(rng, 1, 3);
    std::vector<std::pair<Exponent, GPoly>> terms;
    std::vector<Exponent> used;
    while (static_cast<long>(terms.size()) < n) {
        Rat a = rat(uniform(rng, -8, 8), 4), b = real ? Rat(0) : rat(uniform(rng, -8, 8), 4);
        if (a * a + b * b > 4) continue;
        Exponent e{a, b};
        bool dup = false;
        for (const auto& u : used) dup = dup || u == e;
        if (dup) continue;
        used.push_back(e);
        long d = uniform(rng, 0, 2);
        std::vector<ExactScalar> c;
        for (long k = 0; k <= d; ++k) c.push_back(real ? ExactScalar(uniform(rng, -3, 3)) : small_gaussian(rng, 3));
        if (c.back().is_zero()) c.back() = ExactScalar(1);
        terms.emplace_back(e, GPoly(c));
    }
    return PolyExpPoly::from_terms(syms, terms);
}

// up to `terms` terms over symbols s = 1 and t = sqrt(2) with small exponents
inline ExpPoly random_exp_poly(std::mt19937_64& rng, long terms, long coeff_bound = 3) {
    SymbolList syms = parse_symbols("s=1,t=sqrt(2)");
    ExpPoly f(syms);
    long n = uniform(rng, 1, terms);
    for (long k = 0; k < n; ++k)
        f.add({rat(uniform(rng, -4, 4), 2), rat(uniform(rng, -2, 2), 2)}, small_gaussian(rng, coeff_bound));
    if (f.is_zero()) f = ExpPoly::constant(syms, ExactScalar(1));
    return f;
}

// a simple f over one symbol s = 1: exponents j * rho for small integers j
inline ExpPoly random_simple_exp_poly(std::mt19937_64& rng, long max_terms) {
    SymbolList syms = parse_symbols("s=1");
    Rat rho = rat(uniform(rng, 1, 3), uniform(rng, 1, 2));
    ExpPoly f(syms);
    while (f.size() < 2) {
        f = ExpPoly(syms);
        long n = uniform(rng, 2, max_terms);
        for (long k = 0; k < n; ++k) f.add({rho * Rat(uniform(rng, -3, 4))}, small_gaussian(rng, 4));
    }
    return f;
}

// integer-vanishing construction: classes e^{a z} e^{pi i c z} with shifts 2k and
// coefficients summing to zero in each class
inline ExpPoly random_integer_vanishing(std::mt19937_64& rng) {
    SymbolList syms = parse_symbols("s=1,p=pi*i");
    ExpPoly f(syms);
    long classes = uniform(rng, 1, 3);
    for (long c = 0; c < classes; ++c) {
        Rat a = rat(uniform(rng, -4, 4), 2), base = rat(uniform(rng, -3, 3), uniform(rng, 1, 3));
        long members = uniform(rng, 2, 3);
        ExactScalar total(0);
        for (long m = 0; m < members; ++m) {
            ExactScalar lam = m + 1 < members ? small_gaussian(rng, 3) : -total;
            total += lam;
            f.add({a, base + Rat(2 * uniform(rng, -2, 2))}, lam);
        }
    }
    return f;
}

inline ETowerElem random_elem(std::mt19937_64& rng, unsigned height, long max_terms, BaseExp mode = BaseExp::Trivial) {
    auto random_mpoly = [&]() {
        MPoly p(uniform(rng, -3, 3));
        long extra = uniform(rng, 0, 2);
        for (long k = 0; k < extra; ++k) {
            MPoly m(uniform(rng, -2, 2));
            long deg = uniform(rng, 1, 2);
            for (long d = 0; d < deg; ++d) m = m * MPoly::var(static_cast<unsigned>(uniform(rng, 1, 2)));
            p += m;
        }
        return p;
    };
    ETowerElem r;
    long n = uniform(rng, 1, max_terms);
    for (long k = 0; k < n; ++k) {
        MPoly c = random_mpoly();
        if (height == 0 || uniform(rng, 0, 3) == 0) {
            r = r + ETowerElem(c);
        } else {
            ETowerElem e = random_elem(rng, height - 1, 2, mode);
            r = r + ETowerElem(c) * ETowerElem::exp(e, mode);
        }
    }
    return r;
}

inline ETowerElem random_nonzero_elem(std::mt19937_64& rng, unsigned height, long max_terms,
                                      BaseExp mode = BaseExp::Trivial) {
    ETowerElem e;
    while (e.is_zero()) e = random_elem(rng, height, max_terms, mode);
    return e;
}

inline IntMatrix random_siegel_system(std::mt19937_64& rng) {
    long m = uniform(rng, 1, 2);
    long n = uniform(rng, m + 1, 4);
    long c0 = uniform(rng, 1, 5);
    IntMatrix C;
    bool nonzero = false;
    while (!nonzero) {
        C.assign(static_cast<size_t>(m), std::vector<Int>(static_cast<size_t>(n)));
        for (auto& row : C)
            for (auto& x : row) {
                x = uniform(rng, -c0, c0);
                nonzero = nonzero || x != 0;
            }
    }
    return C;
}

}  // namespace gen
