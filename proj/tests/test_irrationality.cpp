#include "oracles.hpp"
#include "translab/combinatorics.hpp"
#include "translab/error.hpp"
#include "translab/irrationality.hpp"

#include <gtest/gtest.h>

using namespace translab;

namespace {

constexpr long kPrec = 256;

Int ipow(const Int& b, unsigned e) {
    Int r = 1;
    for (unsigned k = 0; k < e; ++k) r *= b;
    return r;
}

}  // namespace

TEST(ShiftedLegendre, Examples) {
    EXPECT_EQ(shifted_legendre(0), QPoly(Rat(1)));
    EXPECT_EQ(shifted_legendre(1), parse_poly("1-2x", "x"));
    EXPECT_EQ(shifted_legendre(2), parse_poly("1-6x+6x^2", "x"));
}

TEST(ShiftedLegendre, RodriguesForm) {
    for (unsigned n = 0; n <= 12; ++n) {
        QPoly p = parse_poly("x*(1-x)", "x"), q(Rat(1));
        for (unsigned k = 0; k < n; ++k) q = q * p;
        for (unsigned k = 0; k < n; ++k) q = q.derivative();
        EXPECT_EQ(shifted_legendre(n) * QPoly(Rat(factorial(n))), q) << n;
    }
}

TEST(Beukers, Zeta2Examples) {
    BeukersCertificate c0 = beukers_zeta2(0, kPrec);
    EXPECT_EQ(c0.A, 1);
    EXPECT_EQ(c0.B, 0);
    EXPECT_TRUE(c0.I.overlaps(Ball::pi(kPrec) * Ball::pi(kPrec) / Ball(6, kPrec)));
    BeukersCertificate c1 = beukers_zeta2(1, kPrec);
    EXPECT_EQ(c1.A, 3);
    EXPECT_EQ(c1.B, -5);
    EXPECT_EQ(c1.d, 1);
}

TEST(Beukers, Zeta3Examples) {
    BeukersCertificate c0 = beukers_zeta3(0, kPrec);
    EXPECT_EQ(c0.A, 2);
    EXPECT_EQ(c0.B, 0);
    EXPECT_TRUE(c0.I.overlaps(Ball(2, kPrec) * oracle::ball(oracle::zeta3, kPrec)));
    BeukersCertificate c1 = beukers_zeta3(1, kPrec);
    EXPECT_EQ(c1.A, 10);
    EXPECT_EQ(c1.B, -12);
}

TEST(Beukers, AgreesWithQuadrature) {
    for (unsigned n = 1; n <= 3; ++n)
        EXPECT_TRUE(beukers_zeta2(n, kPrec).I.overlaps(oracle::ball(oracle::beukers_quad_zeta2[n - 1], kPrec))) << n;
    for (unsigned n = 1; n <= 2; ++n)
        EXPECT_TRUE(beukers_zeta3(n, kPrec).I.overlaps(oracle::ball(oracle::beukers_quad_zeta3[n - 1], kPrec))) << n;
}

TEST(Beukers, ZetaCoefficientIsAperySequence) {
    for (unsigned n = 0; n < oracle::apery_b_zeta2.size(); ++n) {
        EXPECT_EQ(beukers_zeta2(n, kPrec).a, Rat(Int(oracle::apery_b_zeta2[n]))) << n;
        EXPECT_EQ(beukers_zeta3(n, kPrec).a, Rat(Int(2) * Int(oracle::apery_b_zeta3[n]))) << n;
    }
}

TEST(Beukers, ExampleBounds) {
    BeukersCertificate c5 = beukers_zeta2(5, kPrec);
    Ball phi = (sqrt(Ball(5, kPrec)) - Ball(1, kPrec)) / Ball(2, kPrec);
    Ball bound = pow(phi, 25) * Ball::pi(kPrec) * Ball::pi(kPrec) / Ball(6, kPrec);
    EXPECT_TRUE(certainly_le(c5.I.abs(), bound));
    BeukersCertificate c10 = beukers_zeta3(10, kPrec);
    Ball bound3 = Ball(2, kPrec) * pow(inv(Ball(27, kPrec)), 10) * oracle::ball(oracle::zeta3, kPrec);
    EXPECT_TRUE(certainly_le(c10.I.abs(), bound3));
}

TEST(Beukers, IntegralityBoundAndRelation) {
    for (ZetaTarget t : {ZetaTarget::Zeta2, ZetaTarget::Zeta3}) {
        unsigned e = target_exponent(t);
        Ball zeta = t == ZetaTarget::Zeta2 ? Ball::pi(kPrec) * Ball::pi(kPrec) / Ball(6, kPrec)
                                           : oracle::ball(oracle::zeta3, kPrec);
        for (unsigned n = 0; n <= 30; ++n) {
            BeukersCertificate c = beukers(t, n, kPrec);
            Int de = ipow(c.d, e);
            EXPECT_EQ(c.d, lcm_upto(n)) << n;
            EXPECT_TRUE(c.integral()) << n;
            EXPECT_EQ(Rat(de) * c.a, Rat(c.A)) << n;
            EXPECT_EQ(Rat(de) * c.b, Rat(c.B)) << n;
            EXPECT_TRUE(c.within_bound()) << n;
            if (n > 0) {
                EXPECT_TRUE(certainly_le(c.I.abs(), c.bound)) << n;
            }
            Ball rel = (Ball(c.A, kPrec) * zeta + Ball(c.B, kPrec)) / Ball(de, kPrec);
            EXPECT_TRUE(rel.overlaps(c.I)) << n;
            if (n <= 20) {
                EXPECT_TRUE(c.nonzero()) << n;
            }
        }
    }
}

TEST(Beukers, TargetNames) {
    EXPECT_EQ(parse_target("zeta2"), ZetaTarget::Zeta2);
    EXPECT_EQ(parse_target("zeta3"), ZetaTarget::Zeta3);
    EXPECT_STREQ(target_name(ZetaTarget::Zeta3), "zeta3");
    EXPECT_THROW(parse_target("zeta4"), Error);
}

TEST(GapReport, RatesShrink) {
    for (ZetaTarget t : {ZetaTarget::Zeta2, ZetaTarget::Zeta3}) {
        GapReport r = irrationality_gap_report(t, 20, kPrec);
        ASSERT_EQ(r.rows.size(), 20u);
        EXPECT_TRUE(r.shrinking());
        EXPECT_TRUE(r.rate.positive());
        EXPECT_TRUE(certainly_lt(r.rate, Ball(Rat(95, 100), kPrec)));
        for (const auto& row : r.rows) EXPECT_TRUE(row.margin.positive()) << row.n;
    }
}

TEST(GapReport, SingleRow) {
    GapReport r = irrationality_gap_report(ZetaTarget::Zeta2, 1, kPrec);
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].n, 1u);
    EXPECT_TRUE(r.rows[0].margin.positive());
}

TEST(Pade, ThreeMatchesOracle) {
    PadePair p = pade_exp(3);
    ASSERT_EQ(p.Q.degree(), 3);
    for (unsigned k = 0; k <= 3; ++k) EXPECT_EQ(p.Q[k], Rat(oracle::pade_q3[k])) << k;
    EXPECT_EQ(p.T, parse_poly("x^3-15x^2+74x-120", "x"));
}

TEST(Pade, TouchardEndpoints) {
    for (unsigned n = 1; n <= 10; ++n) {
        PadePair p = pade_exp(n);
        Rat sign = n % 2 ? -1 : 1;
        EXPECT_EQ(p.T.eval(Rat(0)), sign * Rat(factorial(2 * n)) / Rat(factorial(n))) << n;
        EXPECT_EQ(p.T.eval(Rat(n)), sign * Rat(factorial(n))) << n;
        EXPECT_EQ(p.Q.degree(), static_cast<int>(n));
        EXPECT_EQ(p.Q[n], 1);
        for (unsigned k = 0; k <= n; ++k)
            EXPECT_EQ(p.P[k], sign * Rat(factorial(2 * n - k)) / Rat(factorial(n)) * Rat(binomial(n, k))) << n << " " << k;
        EXPECT_EQ(p.P.reflected(), p.Q) << n;
    }
}

TEST(Pade, RemainderWithinBound) {
    for (unsigned n = 1; n <= 8; ++n) {
        PadePair p = pade_exp(n);
        for (long x : {-2L, -1L, 1L, 2L}) {
            Ball bx(x, kPrec);
            EXPECT_TRUE(certainly_le(p.remainder(bx).abs(), p.remainder_bound(bx))) << n << " " << x;
            EXPECT_FALSE(p.remainder(bx).contains_zero()) << n << " " << x;
        }
    }
}

TEST(Pade, RemainderSeriesAtOne) {
    // Q_3(x) e^x - P_3(x) = sum_m c_m x^m with c_m = 0 for m <= 6; sum at x = 1 up to m = 80
    PadePair p = pade_exp(3);
    Rat value(0);
    for (unsigned m = 0; m <= 80; ++m) {
        Rat c(0);
        for (unsigned j = 0; j <= 3 && j <= m; ++j) c += p.Q[j] / Rat(factorial(m - j));
        c -= p.P[m];
        if (m <= 6) {
            EXPECT_EQ(c, 0) << m;
        }
        value += c;
    }
    Ball r = p.remainder(Ball(1, kPrec));
    EXPECT_TRUE(r.overlaps(Ball(value, kPrec).add_error(Rat(1, Int("1000000000000000000000000000000000000000000000000000000000000000000000000000000")))));
    Ball e = exp(Ball(1, kPrec));
    EXPECT_TRUE(certainly_le(r.abs(), Ball(6, kPrec) * e / Ball(5040, kPrec)));
}

TEST(SequenceCheck, EulerNumber) {
    std::vector<std::pair<Int, Int>> pq;
    Int q = 1;
    for (unsigned n = 1; n <= 20; ++n) {
        q *= n;
        Int p = 0, f = 1;
        for (unsigned k = 0; k <= n; ++k) {
            if (k) f *= k;
            p += q / f;
        }
        pq.push_back({p, q});
    }
    SequenceReport r = irrationality_sequence_check([](long p) { return exp(Ball(1, p)); }, pq, kPrec);
    ASSERT_EQ(r.rows.size(), 20u);
    for (const auto& row : r.rows) EXPECT_TRUE(certainly_lt(row.gap, Ball(Rat(1, row.n), kPrec))) << row.n;
    EXPECT_EQ(r.decreasing_length(), 20u);
    EXPECT_STREQ(SequenceReport::label, "finite evidence, not a proof");
}

TEST(SequenceCheck, RationalInputIsRejected) {
    try {
        irrationality_sequence_check([](long p) { return Ball(Rat(3, 2), p); }, {{Int(3), Int(2)}, {Int(6), Int(4)}}, kPrec);
        FAIL() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(SequenceCheck, BeukersApproximationsToZetaThree) {
    std::vector<std::pair<Int, Int>> pq;
    // reduced gaps rise whenever lcm(1..n) jumps; from n = 19 to 22 they fall
    for (unsigned n = 1; n <= 22; ++n) {
        BeukersCertificate c = beukers_zeta3(n, kPrec);
        Int g = gcd(c.A, c.B);
        Int q = c.A / g, p = -c.B / g;
        pq.push_back({p, q});
    }
    SequenceReport r = irrationality_sequence_check([](long p) { return Ball::zeta(3, p); }, pq, 512);
    EXPECT_EQ(r.decreasing_length(), 4u);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(row.coprime);
        EXPECT_TRUE(row.gap.positive());
    }
    EXPECT_TRUE(certainly_lt(r.rows.back().gap, r.rows.front().gap));
}
