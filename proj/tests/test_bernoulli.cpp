#include "oracles.hpp"
#include "translab/bernoulli.hpp"
#include "translab/combinatorics.hpp"
#include "translab/summation.hpp"

#include <gtest/gtest.h>

using namespace translab;

namespace {

Rat integral01(const QPoly& p) {
    Rat s(0);
    for (int k = 0; k <= p.degree(); ++k) s += p[static_cast<size_t>(k)] / Rat(k + 1);
    return s;
}

Rat pow2(long e) {
    Rat r(1);
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= 2;
    return e < 0 ? Rat(1) / r : r;
}

}  // namespace

TEST(BernoulliNumber, Examples) {
    EXPECT_EQ(bernoulli_number(1, BernoulliSign::Plus), Rat(1, 2));
    EXPECT_EQ(bernoulli_number(2, BernoulliSign::Minus), Rat(1, 6));
    EXPECT_EQ(bernoulli_number(5, BernoulliSign::Plus), 0);
    EXPECT_EQ(bernoulli_number(0, BernoulliSign::Plus), 1);
}

TEST(BernoulliNumber, MatchesTable) {
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(bernoulli_number(n), Rat(oracle::bernoulli_minus[n])) << n;
}

TEST(BernoulliNumber, OddVanishing) {
    for (unsigned n = 3; n <= 41; n += 2) {
        EXPECT_EQ(bernoulli_number(n, BernoulliSign::Minus), 0) << n;
        EXPECT_EQ(bernoulli_number(n, BernoulliSign::Plus), 0) << n;
    }
}

TEST(BernoulliNumber, SignFlip) {
    for (unsigned n = 0; n <= 41; ++n) {
        Rat minus = bernoulli_number(n, BernoulliSign::Minus);
        EXPECT_EQ(bernoulli_number(n, BernoulliSign::Plus), n % 2 ? -minus : minus) << n;
    }
}

TEST(BernoulliPoly, Examples) {
    EXPECT_EQ(bernoulli_poly(0), QPoly(Rat(1)));
    EXPECT_EQ(bernoulli_poly(1), QPoly(std::vector<Rat>{Rat(-1, 2), Rat(1)}));
    EXPECT_EQ(bernoulli_poly(2), QPoly(std::vector<Rat>{Rat(1, 6), Rat(-1), Rat(1)}));
}

TEST(BernoulliPoly, MonicOfDegreeN) {
    for (unsigned n = 0; n <= 25; ++n) {
        QPoly b = bernoulli_poly(n);
        EXPECT_EQ(b.degree(), static_cast<int>(n));
        EXPECT_EQ(b[n], 1);
    }
}

TEST(BernoulliPoly, MeanZero) {
    for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(integral01(bernoulli_poly(n)), 0) << n;
}

TEST(BernoulliPoly, Orthogonality) {
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned m = 1; m <= 10; ++m) {
            Rat lhs = integral01(bernoulli_poly(n) * bernoulli_poly(m));
            Rat rhs = Rat(factorial(m) * factorial(n)) / Rat(factorial(m + n)) * bernoulli_number(m + n);
            if (n % 2 == 0) rhs = -rhs;
            EXPECT_EQ(lhs, rhs) << n << " " << m;
        }
}

TEST(BernoulliPoly, Derivative) {
    for (unsigned n = 1; n <= 20; ++n)
        EXPECT_EQ(bernoulli_poly(n).derivative(), bernoulli_poly(n - 1) * QPoly(Rat(n))) << n;
}

TEST(BernoulliPoly, HalfValue) {
    for (unsigned n = 1; n <= 10; ++n)
        EXPECT_EQ(bernoulli_poly(2 * n).eval(Rat(1, 2)), (pow2(1 - 2 * static_cast<long>(n)) - 1) * bernoulli_number(2 * n));
}

TEST(BernoulliPoly, MultiplicationFormula) {
    for (unsigned n = 1; n <= 8; ++n)
        for (long m : {2L, 3L, 5L})
            for (Rat x : {Rat(0), Rat(1, 7), Rat(-2, 3)}) {
                QPoly b = bernoulli_poly(n);
                Rat s(0);
                for (long k = 0; k < m; ++k) s += b.eval(x + Rat(k, m));
                Rat scale(1);
                for (unsigned j = 1; j < n; ++j) scale *= m;
                EXPECT_EQ(b.eval(Rat(m) * x), scale * s) << n << " " << m;
            }
}

TEST(BernoulliFunction, Periodic) {
    EXPECT_EQ(bernoulli_function(2, Rat(5, 2)), Rat(-1, 12));
    EXPECT_EQ(bernoulli_function(3, Rat(-3, 4)), bernoulli_poly(3).eval(Rat(1, 4)));
    EXPECT_TRUE(bernoulli_function(2, Ball(Rat(7, 3), 128)).contains(bernoulli_poly(2).eval(Rat(1, 3))));
}

TEST(BernoulliFourier, Examples) {
    EXPECT_TRUE(bernoulli_fourier(3, 0).is_zero());
    long p = 128;
    CBall one = enclose_complex(bernoulli_fourier(1, 1).to_closed_form(), p);
    // -1/(2 pi i) = i/(2 pi)
    EXPECT_TRUE(one.re().contains_zero());
    EXPECT_TRUE(one.im().overlaps(inv(Ball(2, p) * Ball::pi(p))));
    CBall two = enclose_complex(bernoulli_fourier(2, 1).to_closed_form(), p);
    EXPECT_TRUE(two.re().overlaps(inv(Ball(2, p) * sqr(Ball::pi(p)))));
}

TEST(ZetaEven, Examples) {
    EXPECT_EQ(zeta_even(1), Rat(1, 6));
    EXPECT_EQ(zeta_even(2), Rat(1, 90));
    EXPECT_EQ(zeta_even(3), Rat(1, 945));
    for (unsigned n = 1; n <= 5; ++n)
        EXPECT_EQ(zeta_even(n), Rat(oracle::zeta_even_small[n - 1].first, oracle::zeta_even_small[n - 1].second));
    EXPECT_EQ(zeta_even(6), Rat(oracle::zeta12_over_pi12));
    EXPECT_EQ(zeta_even(7), Rat(oracle::zeta14_over_pi14));
    EXPECT_EQ(zeta_even(8), Rat(oracle::zeta16_over_pi16));
}

TEST(ZetaEven, IntersectsTruncatedSeries) {
    for (unsigned n = 1; n <= 8; ++n) {
        QPoly B(Rat(1)), lin(std::vector<Rat>{Rat(1), Rat(1)});
        for (unsigned k = 0; k < 2 * n; ++k) B = B * lin;
        Ball series = unilateral_partial_sum(QPoly(Rat(1)), B, 100000, 256);
        Ball closed = Ball(zeta_even(n), 256) * pow(Ball::pi(256), 2 * n);
        EXPECT_TRUE(closed.overlaps(series)) << n;
    }
}

TEST(ZetaEven, AgreesWithCotExpansion) {
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(zeta_even_via_cot(n), zeta_even(n)) << n;
}

TEST(ConjBernoulli, ThreeMatchesZetaThree) {
    long p = 256;
    Ball b3 = conj_bernoulli(3, p).value;
    Ball want = -Ball(3, p) * oracle::ball(oracle::zeta3, p) / (Ball(2, p) * pow(Ball::pi(p), 3));
    EXPECT_TRUE(b3.overlaps(want));
    EXPECT_LT(b3.rad_double(), 1e-40);
}

TEST(ConjBernoulli, HalfAtOneIsMinusLog2OverPi) {
    long p = 256;
    Ball v = conj_bernoulli_half(1, p).value;
    EXPECT_TRUE(v.overlaps(-oracle::ball(oracle::ln2_over_pi, p)));
}

TEST(ConjBernoulli, HalfAtEvenIndexIsZero) {
    for (unsigned n = 2; n <= 10; n += 2) {
        Ball v = conj_bernoulli_half(n, 128).value;
        EXPECT_TRUE(v.is_exact() && v.contains_zero()) << n;
    }
}

TEST(ConjBernoulli, ConjBernoulliHalfMatchesScaling) {
    long p = 256;
    for (unsigned n = 3; n <= 9; n += 2) {
        Ball half = conj_bernoulli_half(n, p).value;
        Ball scaled = Ball(pow2(1 - static_cast<long>(n)) - 1, p) * conj_bernoulli(n, p).value;
        EXPECT_TRUE(half.overlaps(scaled)) << n;
        EXPECT_LT(half.rad_double(), 1e-30) << n;
    }
}

TEST(OmegaCoeff, EvenIndicesVanishExactly) {
    for (unsigned j : {0u, 2u, 4u, 10u}) {
        Ball w = omega_coeff(j, 128);
        EXPECT_TRUE(w.is_exact() && w.contains_zero()) << j;
    }
}

TEST(OmegaCoeff, OneIsLog2OverPi) {
    Ball w = omega_coeff(1, 256);
    EXPECT_TRUE(w.positive());
    EXPECT_TRUE(w.overlaps(oracle::ball(oracle::ln2_over_pi, 256)));
}

TEST(ZetaOdd, ViaConjugateBernoulli) {
    long p = 256;
    const char* refs[] = {oracle::zeta3, oracle::zeta5, oracle::zeta7};
    for (unsigned n = 1; n <= 3; ++n) {
        Ball z = zeta_odd_via_conj(n, p);
        EXPECT_TRUE(z.overlaps(oracle::ball(refs[n - 1], p))) << n;
        EXPECT_LT(z.rad_double(), 1e-20) << n;
        QPoly B(Rat(1)), lin(std::vector<Rat>{Rat(1), Rat(1)});
        for (unsigned k = 0; k < 2 * n + 1; ++k) B = B * lin;
        EXPECT_TRUE(z.overlaps(unilateral_partial_sum(QPoly(Rat(1)), B, 100000, p))) << n;
    }
}

TEST(ZetaOdd, GeneratingFunctionIdentityAtOneTenth) {
    // sum_n conj-B_n(1/2) x^n / n! = -x e^{x/2} / (e^x - 1) * Omega(x); terms past n = 40 are below 1e-70
    long p = 256;
    Ball x(Rat(1, 10), p), lhs(p);
    for (unsigned n = 1; n <= 40; ++n) lhs += conj_bernoulli_half(n, p).value * pow(x, n) / Ball(factorial(n), p);
    Ball rhs = -(x * exp(x / Ball(2, p)) / (exp(x) - Ball(1, p))) * omega_function(x, p);
    Ball diff = (lhs - rhs).abs();
    EXPECT_TRUE(certainly_lt(diff, Ball(Rat(1, Int("10000000000000000000000000000000000000000000000000000000000000")), p)));
}
