#include "generators.hpp"
#include "translab/error.hpp"
#include "translab/qlinalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace translab;

namespace {

// entries given as symbol indices with coefficient 1, -1 for a zero entry
LinFormMatrix symbol_matrix(size_t nsym, const std::vector<std::vector<int>>& idx) {
    LinFormMatrix M;
    for (size_t k = 0; k < nsym; ++k) M.symbols.push_back("l" + std::to_string(k + 1));
    for (const auto& r : idx) {
        std::vector<std::vector<Rat>> row;
        for (int j : r) {
            std::vector<Rat> v(nsym, Rat(0));
            if (j >= 0) v[static_cast<size_t>(j)] = 1;
            row.push_back(v);
        }
        M.rows.push_back(row);
    }
    return M;
}

std::vector<Rat> vec(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

}  // namespace

TEST(Independence, Examples) {
    // (l1, l2) and (l2, l1) flattened over two symbols
    EXPECT_TRUE(q_independence({vec({1, 0, 0, 1}), vec({0, 1, 1, 0})}).independent);
    Independence d = q_independence({vec({1, 0, 0, 0, 1, 0, 0, 0, 1}), vec({2, 0, 0, 0, 2, 0, 0, 0, 2})});
    EXPECT_FALSE(d.independent);
    EXPECT_EQ(d.relation, (std::vector<Int>{2, -1}));
}

TEST(Independence, RelationIsExact) {
    std::mt19937_64 rng(97);
    for (int t = 0; t < 100; ++t) {
        size_t count = static_cast<size_t>(gen::uniform(rng, 1, 4)), dim = static_cast<size_t>(gen::uniform(rng, 1, 4));
        std::vector<std::vector<Rat>> vs(count, std::vector<Rat>(dim));
        for (auto& v : vs)
            for (auto& x : v) x = gen::small_rat(rng, 2, 3);
        Independence r = q_independence(vs);
        if (count > dim) {
            EXPECT_FALSE(r.independent);
        }
        if (r.independent) continue;
        ASSERT_EQ(r.relation.size(), count);
        bool nonzero = false;
        for (const auto& c : r.relation) nonzero = nonzero || c != 0;
        EXPECT_TRUE(nonzero);
        for (size_t k = 0; k < dim; ++k) {
            Rat s(0);
            for (size_t i = 0; i < count; ++i) s += Rat(r.relation[i]) * vs[i][k];
            EXPECT_EQ(s, 0);
        }
    }
}

TEST(MatrixJson, Parse) {
    LinFormMatrix M =
        parse_matrix_json(R"({"symbols":["a","b"],"rows":[[["1","0"],["0","1/2"]],[["-3/4","1"],["2","0"]]]})");
    EXPECT_EQ(M.m(), 2u);
    EXPECT_EQ(M.n(), 2u);
    EXPECT_EQ(M.rows[1][0][0], Rat(-3, 4));
    EXPECT_EQ(M.row_vector(0), (std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1, 2)}));
    EXPECT_EQ(M.column_vector(0), (std::vector<Rat>{Rat(1), Rat(0), Rat(-3, 4), Rat(1)}));
    EXPECT_EQ(kind_of([] { parse_matrix_json(R"({"rows":[]})"); }), ErrorKind::Parse);
    EXPECT_EQ(kind_of([] { parse_matrix_json(R"({"symbols":["a"],"rows":[[["1"]],[["1"],["2"]]]})"); }),
              ErrorKind::Shape);
    EXPECT_EQ(parse_int_matrix_json("[[1,2],[3,-4]]"), (IntMatrix{{1, 2}, {3, -4}}));
}

TEST(GenericRank, Examples) {
    // one symbol, coefficient matrix of rank 1
    LinFormMatrix one;
    one.symbols = {"l"};
    one.rows = {{{Rat(1)}, {Rat(2)}, {Rat(3)}}, {{Rat(2)}, {Rat(4)}, {Rat(6)}}};
    EXPECT_EQ(generic_rank(one).rank, 1u);
    // appendix-style M_m: first row and column are logs of primes, zero block elsewhere
    for (size_t m = 3; m <= 5; ++m) {
        std::vector<std::vector<int>> idx(m, std::vector<int>(m, -1));
        for (size_t j = 0; j < m; ++j) {
            idx[0][j] = static_cast<int>(j);
            idx[j][0] = static_cast<int>(j);
        }
        EXPECT_EQ(generic_rank(symbol_matrix(m, idx)).rank, 2u) << m;
    }
    GenericRank r = generic_rank(symbol_matrix(6, {{0, 1, 2}, {3, 4, 5}}));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.criterion_bound, Rat(6, 5));
}

TEST(GenericRank, MinorIsNonsingularAndRankIsConsistent) {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        size_t m = static_cast<size_t>(gen::uniform(rng, 1, 3)), n = static_cast<size_t>(gen::uniform(rng, 1, 3));
        size_t s = static_cast<size_t>(gen::uniform(rng, 1, 3));
        LinFormMatrix M;
        for (size_t k = 0; k < s; ++k) M.symbols.push_back("l" + std::to_string(k));
        M.rows.assign(m, std::vector<std::vector<Rat>>(n, std::vector<Rat>(s)));
        for (auto& row : M.rows)
            for (auto& e : row)
                for (auto& c : e) c = Rat(gen::uniform(rng, -1, 1));
        GenericRank g = generic_rank(M, 7 + static_cast<std::uint64_t>(t));
        ASSERT_EQ(g.minor_rows.size(), g.rank);
        ASSERT_EQ(g.minor_cols.size(), g.rank);
        if (g.rank > 0) {
            EXPECT_NE(g.minor_det, 0);
            // recompute the minor at the recorded point
            IntMatrix sub(g.rank, std::vector<Int>(g.rank));
            for (size_t i = 0; i < g.rank; ++i)
                for (size_t j = 0; j < g.rank; ++j) {
                    Rat v(0);
                    const auto& e = M.rows[g.minor_rows[i]][g.minor_cols[j]];
                    for (size_t k = 0; k < s; ++k) v += e[k] * Rat(g.point[k]);
                    sub[i][j] = v.get_num();
                }
            EXPECT_EQ(determinant(sub), g.minor_det);
        }
        std::mt19937_64 pr(1000 + static_cast<std::uint64_t>(t));
        for (int k = 0; k < 5; ++k) {
            std::vector<Int> p;
            for (size_t j = 0; j < s; ++j) p.push_back(Int(static_cast<long>(pr() >> 2)));
            EXPECT_EQ(substituted_rank(M, p), g.rank);
        }
    }
}

TEST(SixExp, Examples) {
    SixExpReport dep = six_exp_verdict(symbol_matrix(3, {{0, 1, 2}, {0, 1, 2}}));
    EXPECT_EQ(dep.verdict, SixExpVerdict::HypothesesFail);
    EXPECT_FALSE(dep.rows.independent);
    EXPECT_EQ(dep.rows.relation, (std::vector<Int>{1, -1}));

    SixExpReport six = six_exp_verdict(symbol_matrix(6, {{0, 1, 2}, {3, 4, 5}}));
    EXPECT_EQ(six.verdict, SixExpVerdict::TheoremApplies);
    EXPECT_EQ(six.asserted_rank, 2u);
    EXPECT_FALSE(six.conjectural);
    EXPECT_EQ(verdict_name(six.verdict), "theorem-applies");

    SixExpReport tall = six_exp_verdict(symbol_matrix(6, {{0, 1}, {2, 3}, {4, 5}}));
    EXPECT_EQ(tall.verdict, SixExpVerdict::TheoremApplies);

    SixExpReport four = six_exp_verdict(symbol_matrix(4, {{0, 1}, {2, 3}}));
    EXPECT_EQ(four.verdict, SixExpVerdict::ConjectureWouldAssert);
    EXPECT_TRUE(four.conjectural);
}

TEST(SixExp, ShapeError) {
    EXPECT_EQ(kind_of([] { six_exp_verdict(symbol_matrix(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})); }), ErrorKind::Shape);
    EXPECT_EQ(kind_of([] { six_exp_verdict(symbol_matrix(3, {{0, 1, 2}})); }), ErrorKind::Shape);
}

TEST(SixExp, NeverAppliesWhenAHypothesisFails) {
    // every 2 x 3 matrix with entries in {0, l1, l2}
    for (int code = 0; code < 729; ++code) {
        std::vector<std::vector<int>> idx(2, std::vector<int>(3));
        int c = code;
        for (auto& row : idx)
            for (auto& e : row) {
                e = c % 3 - 1;
                c /= 3;
            }
        LinFormMatrix M = symbol_matrix(2, idx);
        SixExpReport r = six_exp_verdict(M);
        std::vector<std::vector<Rat>> rows, cols;
        for (size_t i = 0; i < 2; ++i) rows.push_back(M.row_vector(i));
        for (size_t j = 0; j < 3; ++j) cols.push_back(M.column_vector(j));
        bool ok = q_independence(rows).independent && q_independence(cols).independent;
        EXPECT_EQ(r.verdict == SixExpVerdict::TheoremApplies, ok) << code;
    }
}

TEST(Siegel, Examples) {
    SiegelSolution a = siegel_solve({{1, 2}});
    EXPECT_EQ(a.x, (std::vector<Int>{2, -1}));
    EXPECT_EQ(a.bound, 4);
    SiegelSolution b = siegel_solve({{1, 1, 1}});
    EXPECT_EQ(b.x, (std::vector<Int>{1, -1, 0}));
    EXPECT_EQ(b.bound, 1);
    SiegelSolution c = siegel_solve({{1, 2, 0}, {3, 5, 0}});
    EXPECT_EQ(c.x, (std::vector<Int>{0, 0, 1}));
    EXPECT_EQ(siegel_bound(1, 2, Int(2)), 4);
    EXPECT_EQ(siegel_bound(2, 4, Int(5)), 20);
    EXPECT_EQ(kind_of([] { siegel_solve({{1, 2}, {3, 4}}); }), ErrorKind::Precondition);
}

TEST(Siegel, RandomSystemsAreSolvedWithinTheBound) {
    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        IntMatrix C = gen::random_siegel_system(rng);
        SiegelSolution s = siegel_solve(C);
        ASSERT_EQ(s.x.size(), C[0].size());
        Int norm = 0;
        for (const auto& v : s.x) norm = std::max(norm, Int(abs(v)));
        EXPECT_GT(norm, 0);
        EXPECT_LE(norm, s.bound);
        EXPECT_EQ(s.bound, siegel_bound(C.size(), C[0].size(), s.c0));
        for (const auto& row : C) {
            Int dot = 0;
            for (size_t j = 0; j < row.size(); ++j) dot += row[j] * s.x[j];
            EXPECT_EQ(dot, 0);
        }
        // first nonzero entry positive
        for (const auto& v : s.x)
            if (v != 0) {
                EXPECT_GT(v, 0);
                break;
            }
    }
}
