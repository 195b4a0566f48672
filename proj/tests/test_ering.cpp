#include "generators.hpp"
#include "oracles.hpp"
#include "translab/error.hpp"
#include "translab/ering.hpp"

#include <gtest/gtest.h>

using namespace translab;

namespace {

constexpr long kPrec = 256;

ETowerElem X(unsigned k = 1) { return ETowerElem::var(k); }
ETowerElem E(const ETowerElem& a, BaseExp m = BaseExp::Trivial) { return ETowerElem::exp(a, m); }

CBall point(const Rat& re, const Rat& im, long prec) { return CBall(Ball(re, prec), Ball(im, prec)); }

bool overlaps(const CBall& a, const CBall& b) { return a.re().overlaps(b.re()) && a.im().overlaps(b.im()); }

}  // namespace

TEST(MPoly, Arithmetic) {
    MPoly x = MPoly::var(1), y = MPoly::var(2);
    MPoly p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_EQ(p.nvars(), 2u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_TRUE(MPoly(7).is_constant());
    EXPECT_EQ(MPoly(7).constant(), 7);
}

TEST(ENormalize, Examples) {
    EXPECT_EQ(parse_elem("E(0)"), ETowerElem(1));
    EXPECT_EQ(parse_elem("E(X1)*E(X1)"), parse_elem("E(2*X1)"));
    EXPECT_EQ(parse_elem("E(3+X1)"), parse_elem("E(X1)"));
    EXPECT_EQ(E(ETowerElem(3) + X()), E(X()));
    EXPECT_EQ(e_normalize(parse_raw("E(X1+X2)")), E(X(1)) * E(X(2)));
}

TEST(ENormalize, FreeBaseKeepsConstants) {
    EXPECT_NE(parse_elem("E(3+X1)", BaseExp::Free), parse_elem("E(X1)", BaseExp::Free));
    EXPECT_EQ(parse_elem("E(3+X1)", BaseExp::Free), parse_elem("E(3)*E(X1)", BaseExp::Free));
    EXPECT_EQ(parse_elem("E(0)", BaseExp::Free), ETowerElem(1));
}

TEST(ENormalize, PrintParseRoundTrip) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        ETowerElem a = gen::random_elem(rng, 2, 4);
        EXPECT_EQ(parse_elem(a.str()), a) << a.str();
        ETowerElem b = gen::random_elem(rng, 2, 4, BaseExp::Free);
        EXPECT_EQ(parse_elem(b.str(), BaseExp::Free), b) << b.str();
    }
}

TEST(EMul, Examples) {
    EXPECT_EQ(e_mul(ETowerElem(1) + E(X()), ETowerElem(1) - E(X())), ETowerElem(1) - E(ETowerElem(2) * X()));
    ETowerElem t = e_mul(X(), E(E(X())));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t.terms()[0].coeff, MPoly::var(1));
    EXPECT_EQ(t.height(), 2u);
    EXPECT_EQ(e_add(X(), -X()), ETowerElem());
}

TEST(EMul, Units) {
    EXPECT_TRUE((-E(X())).is_unit());
    EXPECT_TRUE(ETowerElem(1).is_unit());
    EXPECT_FALSE((ETowerElem(2) * E(X())).is_unit());
    EXPECT_FALSE((ETowerElem(1) + E(X())).is_unit());
}

TEST(EMul, IntegralDomain) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 100; ++t) {
        ETowerElem a = gen::random_nonzero_elem(rng, 2, 4), b = gen::random_nonzero_elem(rng, 2, 4);
        EXPECT_FALSE((a * b).is_zero()) << a.str() << " * " << b.str();
    }
}

TEST(ERing, RingAxiomsAndHomomorphism) {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 200; ++t) {
        ETowerElem a = gen::random_elem(rng, 2, 5), b = gen::random_elem(rng, 2, 5), c = gen::random_elem(rng, 2, 5);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(E(a + b), E(a) * E(b));
        EXPECT_EQ(E(a + b, BaseExp::Free), E(a, BaseExp::Free) * E(b, BaseExp::Free));
    }
}

TEST(ERing, HeightAndCanonicalOrder) {
    ETowerElem a = X(), b = E(X()), c = E(E(X()));
    EXPECT_EQ(a.height(), 0u);
    EXPECT_EQ(b.height(), 1u);
    EXPECT_EQ(c.height(), 2u);
    EXPECT_LT(compare(a, b), 0);
    EXPECT_LT(compare(b, c), 0);
    EXPECT_EQ(compare(c, c), 0);
    EXPECT_EQ((b + c).str(), (c + b).str());
}

TEST(Gamma, Examples) {
    CBall zero = point(Rat(0), Rat(0), kPrec);
    EXPECT_TRUE(gamma_eval(E(X()), {zero}, kPrec).re().contains(Rat(1)));
    ETowerElem g = E(E(X(), BaseExp::Free) - ETowerElem(1), BaseExp::Free);
    CBall at0 = gamma_eval(g, {zero}, kPrec);
    EXPECT_TRUE(at0.re().contains(Rat(1)) && at0.im().contains_zero());
    CBall tenth = gamma_eval(g, {point(Rat(1, 10), Rat(0), kPrec)}, kPrec);
    EXPECT_TRUE(tenth.re().overlaps(oracle::ball(oracle::exp_exp_tenth, kPrec)));
    // 1 + x + x^2 + 5/6 x^3 + 5/8 x^4 plus a tail below x^5 / (1 - x), since B_n <= n!
    Rat x(1, 10);
    Rat prefix = 1 + x + x * x + Rat(5, 6) * x * x * x + Rat(5, 8) * x * x * x * x;
    Rat tail = x * x * x * x * x / (1 - x);
    EXPECT_TRUE(tenth.re().overlaps(Ball::interval(prefix, prefix + tail, kPrec)));
}

TEST(Gamma, TrivialModeIsARingMorphism) {
    // in trivial mode E(m) = 1 for integers, so Gamma only sees the non-constant part
    CBall zero = point(Rat(0), Rat(0), kPrec);
    CBall v = gamma_eval(parse_elem("E(X1-1)"), {zero}, kPrec);
    EXPECT_TRUE(v.re().contains(Rat(1)));
}

TEST(Gamma, Homomorphism) {
    // nested exponentials at complex points can overflow; those instances are skipped by kind
    std::mt19937_64 rng(83);
    int evaluated = 0;
    for (int t = 0; t < 100; ++t) {
        BaseExp mode = t % 2 ? BaseExp::Free : BaseExp::Trivial;
        ETowerElem a = gen::random_elem(rng, 2, 3, mode), b = gen::random_elem(rng, 2, 3, mode);
        std::vector<CBall> p = {point(gen::rat(gen::uniform(rng, -4, 4), 4), gen::rat(gen::uniform(rng, -4, 4), 4), kPrec),
                                point(gen::rat(gen::uniform(rng, -4, 4), 4), gen::rat(gen::uniform(rng, -4, 4), 4), kPrec)};
        try {
            CBall ga = gamma_eval(a, p, kPrec), gb = gamma_eval(b, p, kPrec);
            EXPECT_TRUE(overlaps(gamma_eval(a * b, p, kPrec), ga * gb)) << a.str() << " ; " << b.str();
            EXPECT_TRUE(overlaps(gamma_eval(a + b, p, kPrec), ga + gb)) << a.str() << " ; " << b.str();
            if (mode == BaseExp::Free) {
                EXPECT_TRUE(overlaps(gamma_eval(ETowerElem::exp(a, mode), p, kPrec), exp(ga))) << a.str();
            }
            ++evaluated;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InsufficientPrecision);
        }
    }
    EXPECT_GE(evaluated, 80);
}

TEST(Gamma, InjectivityWitnesses) {
    // probabilistic: a nonzero normal form should evaluate away from zero at a random point
    std::mt19937_64 rng(89);
    int witnessed = 0;
    for (int t = 0; t < 100; ++t) {
        ETowerElem a = gen::random_nonzero_elem(rng, 2, 4);
        std::vector<CBall> p = {point(gen::rat(gen::uniform(rng, -7, 7), 7), gen::rat(gen::uniform(rng, -7, 7), 7), 512),
                                point(gen::rat(gen::uniform(rng, -7, 7), 7), gen::rat(gen::uniform(rng, -7, 7), 7), 512)};
        if (!gamma_eval(a, p, 512).contains_zero()) ++witnessed;
    }
    EXPECT_GE(witnessed, 95);
}

TEST(Gamma, HugeExponentsAreReported) {
    CBall five = point(Rat(5), Rat(0), kPrec);
    try {
        gamma_eval(E(E(E(X()))), {five}, kPrec);
        FAIL() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientPrecision);
    }
}
