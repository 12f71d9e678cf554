#include "support/oracles.hpp"

#include "pdloop/complex_model.hpp"
#include "pdloop/error.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace pdloop;
using oracle::make_spec;

TEST(ValidatePd, RankOneSymmetric)
{
    auto s = make_spec(5, 6, {2}, FpMatrix(Zp(5), {{1}}));
    EXPECT_TRUE(validate_pd(s).ok);
}

TEST(ValidatePd, SkewBlockRejectedForEvenN)
{
    auto s = make_spec(5, 6, {1, 1}, FpMatrix(Zp(5), {{0, 1}, {4, 0}}));
    auto r = validate_pd(s);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(r.violates(Constraint::BSymmetric));
    EXPECT_FALSE(r.violates(Constraint::Nonsingular));
}

TEST(ValidatePd, OddNRankOneTorsionNeverExists)
{
    for (int c = 0; c < 3; ++c) {
        auto s = make_spec(3, 7, {1}, FpMatrix(Zp(3), {{c}}));
        auto r = validate_pd(s);
        EXPECT_FALSE(r.ok);
        EXPECT_TRUE(r.violates(Constraint::Nonsingular)) << "c = " << c;
        EXPECT_FALSE(r.advisories.empty());
    }
}

TEST(ValidatePd, CrossExponentCouplingIsOnlyAdvisory)
{
    auto s = make_spec(5, 6, {2, 1}, FpMatrix(Zp(5), {{0, 1}, {1, 0}}));
    auto r = validate_pd(s);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.advisories.size(), 1u);
    s.r = {1, 1};
    EXPECT_TRUE(validate_pd(s).advisories.empty());
}

TEST(ValidatePd, CollectsEveryViolation)
{
    // singular, C nonzero and B not symmetric at once
    auto s = make_spec(3, 6, {1, 1}, FpMatrix(Zp(3), {{0, 1, 0}, {2, 0, 0}, {1, 0, 0}}));
    auto r = validate_pd(s);
    EXPECT_TRUE(r.violates(Constraint::Nonsingular));
    EXPECT_TRUE(r.violates(Constraint::CBlockZero));
    EXPECT_TRUE(r.violates(Constraint::BSymmetric));
}

TEST(ValidatePd, StructuralErrorsAreDistinct)
{
    auto s = make_spec(5, 6, {2}, FpMatrix(Zp(5), {{1}}));
    s.r = {};
    EXPECT_THROW(validate_pd(s), StructuralError);
    s = make_spec(5, 6, {2}, FpMatrix(Zp(5), {{1, 0}, {0, 1}}));
    s.k = 3;
    EXPECT_THROW(validate_pd(s), StructuralError);
    s = make_spec(5, 6, {0}, FpMatrix(Zp(5), {{1}}));
    EXPECT_THROW(validate_pd(s), StructuralError);
}

TEST(ValidatePdProperty, PermutationEquivariant)
{
    oracle::Rng rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t p = rng.coin() ? 3 : 5;
        const int n = rng.coin() ? 6 : 7;
        const int k = static_cast<int>(rng.uniform(1, 3));
        const int k1 = static_cast<int>(rng.uniform(0, k));
        FpMatrix A(Zp(p), k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                A.set(i, j, rng.uniform(0, p - 1));
        std::vector<int> r(k1);
        for (auto& x : r)
            x = static_cast<int>(rng.uniform(1, 3));
        auto s = make_spec(p, n, r, A);

        std::vector<int> perm(k1);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.gen);
        auto t = s;
        for (int i = 0; i < k1; ++i) {
            t.r[i] = s.r[perm[i]];
            for (int j = 0; j < k; ++j) {
                const int pj = j < k1 ? perm[j] : j;
                t.A.set(i, j, s.A(perm[i], pj));
            }
        }
        for (int i = k1; i < k; ++i)
            for (int j = 0; j < k1; ++j)
                t.A.set(i, j, s.A(i, perm[j]));
        EXPECT_EQ(validate_pd(s).ok, validate_pd(t).ok);
        EXPECT_EQ(validate_pd(s).ok, oracle::pd_conditions(s));
    }
}

TEST(ValidatePdProperty, OddNAllTorsionForcesEvenK)
{
    for (std::uint32_t p : {3u, 5u})
        for (int k = 1; k <= (p == 3 ? 3 : 2); ++k) {
            const int cells = k * k;
            long long total = 1;
            for (int i = 0; i < cells; ++i)
                total *= p;
            for (long long code = 0; code < total; ++code) {
                FpMatrix A(Zp(p), k, k);
                long long c = code;
                for (int i = 0; i < cells; ++i, c /= p)
                    A.set(i / k, i % k, c % p);
                auto s = make_spec(p, 7, std::vector<int>(k, 1), A);
                if (validate_pd(s).ok)
                    ASSERT_EQ(k % 2, 0);
            }
        }
}

TEST(SkeletonSplitting, Examples)
{
    auto s = make_spec(5, 6, {2}, FpMatrix(Zp(5), {{1}}));
    EXPECT_EQ(skeleton_splitting(s), (WedgeSummands{WedgeSummand::moore(6, 2)}));
    s = make_spec(5, 6, {}, FpMatrix::identity(Zp(5), 2));
    EXPECT_EQ(skeleton_splitting(s), (WedgeSummands{WedgeSummand::sphere(5), WedgeSummand::sphere(6),
                                                    WedgeSummand::sphere(5), WedgeSummand::sphere(6)}));
    s = make_spec(5, 8, {1, 3}, FpMatrix::identity(Zp(5), 3));
    EXPECT_EQ(skeleton_splitting(s), (WedgeSummands{WedgeSummand::moore(8, 1), WedgeSummand::moore(8, 3),
                                                    WedgeSummand::sphere(7), WedgeSummand::sphere(8)}));
    EXPECT_EQ(render(skeleton_splitting(s)), "P^8(p) v P^8(p^3) v S^7 v S^8");
}

TEST(ToGeneral, RankOne)
{
    auto g = to_general(make_spec(5, 6, {}, FpMatrix(Zp(5), {{1}})));
    EXPECT_EQ(g.N, 11);
    EXPECT_EQ(g.gen_degrees, (std::vector<int>{5, 6}));
    EXPECT_EQ(g.c(0, 1), 1u);
    EXPECT_EQ(g.c(1, 0), 1u);  // (-1)^{30} = 1
    EXPECT_TRUE(validate_general(g).ok);
}

TEST(ToGeneral, IdentityRankTwo)
{
    auto g = to_general(make_spec(5, 6, {}, FpMatrix::identity(Zp(5), 2)));
    EXPECT_EQ(g.gen_degrees, (std::vector<int>{5, 5, 6, 6}));
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            nonzero += g.c(i, j) != 0;
    EXPECT_EQ(nonzero, 4);
    EXPECT_EQ(g.c(0, 2), 1u);
    EXPECT_EQ(g.c(1, 3), 1u);
}

TEST(ToGeneral, RejectsInvalidAndSmallN)
{
    EXPECT_THROW(to_general(make_spec(5, 6, {}, FpMatrix(Zp(5), 1, 1))), InvalidSpec);
    EXPECT_THROW(to_general(make_spec(5, 3, {}, FpMatrix(Zp(5), {{1}}))), Unsupported);
}

TEST(ToGeneralProperty, OutputValidates)
{
    for (const auto& s : oracle::sweep(3, 1))
        ASSERT_TRUE(validate_general(to_general(s)).ok);
    oracle::Rng rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 * static_cast<int>(rng.uniform(1, 2));
        auto s = make_spec(5, 9, std::vector<int>(k, 1), oracle::random_cup_matrix(rng, 5, 9, k, k));
        ASSERT_TRUE(validate_pd(s).ok);
        ASSERT_TRUE(validate_general(to_general(s)).ok);
    }
}

TEST(ValidateGeneral, Violations)
{
    GeneralComplexSpec g;
    g.p = 3;
    g.N = 11;
    g.gen_degrees = {5, 6};
    g.c = FpMatrix(Zp(3), {{1, 1}, {2, 0}});
    auto r = validate_general(g);
    EXPECT_TRUE(r.violates(Constraint::CupDegree));
    EXPECT_TRUE(r.violates(Constraint::GradedCommutativity));
    g.N = 10;
    EXPECT_TRUE(validate_general(g).violates(Constraint::TopDimension));
}

TEST(ValidateIntegral, Examples)
{
    ManifoldSpec man{3, {{3, {1}}}, 0, false};
    EXPECT_TRUE(validate_integral(man).ok);
    man.rational_rank = 1;
    EXPECT_TRUE(validate_integral(man).violates(Constraint::RationalRank));
    man.rational_rank = 0;
    man.two_torsion = true;
    EXPECT_TRUE(validate_integral(man).violates(Constraint::TwoTorsion));
    man.two_torsion = false;
    man.m = 2;
    EXPECT_TRUE(validate_integral(man).violates(Constraint::Dimension));
    man.torsion = {{4, {1}}};
    EXPECT_THROW(validate_integral(man), StructuralError);
}
