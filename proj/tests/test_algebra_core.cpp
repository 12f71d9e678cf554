#include "support/oracles.hpp"

#include "pdloop/error.hpp"
#include "pdloop/fp_matrix.hpp"
#include "pdloop/series.hpp"

#include <gtest/gtest.h>

using namespace pdloop;

TEST(Series, BinomialSquare)
{
    TruncatedSeries a(2, {1, 1});
    EXPECT_EQ(series_mul(a, a), TruncatedSeries(2, {1, 2, 1}));
}

TEST(Series, GeometricTimesOneMinusT)
{
    TruncatedSeries geo(5, {1, 1, 1, 1, 1, 1});
    EXPECT_EQ(series_mul(TruncatedSeries(5, {1, -1}), geo), TruncatedSeries::one(5));
}

TEST(Series, ProductMatchesLongDivision)
{
    // (1 + t^5)/(1 - t^4) * 1/(1 - t^10)
    const int cap = 20;
    auto a = polynomial_series(cap, {{0, 1}, {5, 1}}) * series_inv(polynomial_series(cap, {{0, 1}, {4, -1}}));
    auto b = series_inv(polynomial_series(cap, {{0, 1}, {10, -1}}));
    std::vector<Integer> num{1, 0, 0, 0, 0, 1};
    std::vector<Integer> den(15, 0);
    // (1 - t^4)(1 - t^10) = 1 - t^4 - t^10 + t^14
    den[0] = 1;
    den[4] = -1;
    den[10] = -1;
    den[14] = 1;
    EXPECT_EQ(series_mul(a, b).coeffs(), oracle::long_division(num, den, cap));
}

TEST(Series, CapMismatchThrows)
{
    EXPECT_THROW(series_mul(TruncatedSeries(2), TruncatedSeries(3)), StructuralError);
}

TEST(Series, InverseExamples)
{
    EXPECT_EQ(series_inv(TruncatedSeries(4, {1, -1})), TruncatedSeries(4, {1, 1, 1, 1, 1}));
    EXPECT_EQ(series_inv(TruncatedSeries::one(4)), TruncatedSeries::one(4));
    auto s = series_inv(polynomial_series(10, {{0, 1}, {4, -1}, {5, -1}, {9, 1}}));
    EXPECT_EQ(s, TruncatedSeries(10, {1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1}));
    EXPECT_EQ(s.coeffs(), oracle::recurrence(1, 4, 5, 9, 10));
}

TEST(Series, InverseNeedsUnitConstant)
{
    EXPECT_THROW(series_inv(TruncatedSeries(3, {2, 1})), StructuralError);
    EXPECT_THROW(series_inv(TruncatedSeries(3, {0, 1})), StructuralError);
    EXPECT_EQ(series_inv(TruncatedSeries(2, {-1})), TruncatedSeries(2, {-1}));
}

TEST(Series, ExactBeyond64Bits)
{
    // 1/(1 - 4t) has 4^40 = 2^80 in degree 40
    auto s = series_inv(TruncatedSeries(40, {1, -4}));
    EXPECT_EQ(s[40], Integer(1) << 80);
}

TEST(Series, ToString)
{
    EXPECT_EQ(TruncatedSeries(3, {1, 0, -2}).to_string(), "[1,0,-2,0]");
}

namespace {

TruncatedSeries random_series(oracle::Rng& rng, int cap, bool unit)
{
    TruncatedSeries s(cap);
    for (int d = 0; d <= cap; ++d)
        s.set(d, rng.uniform(-5, 5));
    if (unit)
        s.set(0, rng.coin() ? 1 : -1);
    return s;
}

}  // namespace

TEST(SeriesProperty, CommutativeAndAssociative)
{
    oracle::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int cap = static_cast<int>(rng.uniform(0, 12));
        auto a = random_series(rng, cap, false), b = random_series(rng, cap, false), c = random_series(rng, cap, false);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(SeriesProperty, InverseOnThousandUnits)
{
    oracle::Rng rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        const int cap = static_cast<int>(rng.uniform(0, 15));
        auto a = random_series(rng, cap, true);
        ASSERT_EQ(series_mul(a, series_inv(a)), TruncatedSeries::one(cap));
    }
}

TEST(Zp, RejectsBadModulus)
{
    EXPECT_THROW(Zp(2), StructuralError);
    EXPECT_THROW(Zp(9), StructuralError);
    EXPECT_NO_THROW(Zp(3));
}

TEST(Zp, Inverse)
{
    Zp f(7);
    for (Residue a = 1; a < 7; ++a)
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_THROW(f.inv(0), Error);
}

TEST(MatrixRank, Examples)
{
    EXPECT_EQ(matrix_rank(FpMatrix::identity(Zp(5), 3)), 3u);
    EXPECT_EQ(matrix_rank(FpMatrix(Zp(3), 2, 2)), 0u);
    EXPECT_EQ(matrix_rank(FpMatrix(Zp(7), {{1, 2}, {2, 4}})), 1u);
}

TEST(MatrixRank, EntriesReducedOnConstruction)
{
    FpMatrix m(Zp(5), {{-1, 7}});
    EXPECT_EQ(m(0, 0), 4u);
    EXPECT_EQ(m(0, 1), 2u);
}

TEST(MatrixRankProperty, AgreesWithDeterminantRank)
{
    oracle::Rng rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint32_t p = rng.coin() ? 3 : 5;
        const int rows = static_cast<int>(rng.uniform(1, 4)), cols = static_cast<int>(rng.uniform(1, 4));
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
        for (auto& row : a)
            for (auto& x : row)
                x = rng.uniform(0, 2) == 0 ? 0 : rng.uniform(0, p - 1);
        ASSERT_EQ(matrix_rank(FpMatrix::from_rows(Zp(p), a)), oracle::minor_rank(a, p));
    }
}

TEST(MatrixInverse, RoundTrip)
{
    oracle::Rng rng(14);
    Zp f(5);
    for (int trial = 0; trial < 200; ++trial) {
        FpMatrix m(f, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m.set(i, j, rng.uniform(0, 4));
        if (matrix_rank(m) < 3) {
            EXPECT_THROW(m.inverse(), Error);
            continue;
        }
        EXPECT_EQ(m * m.inverse(), FpMatrix::identity(f, 3));
    }
}

TEST(RowSpace, ReduceAndContain)
{
    Zp f(5);
    RowSpace s(f, 3);
    EXPECT_TRUE(s.insert({1, 2, 0}));
    EXPECT_FALSE(s.insert({2, 4, 0}));
    EXPECT_TRUE(s.insert({0, 1, 1}));
    EXPECT_EQ(s.rank(), 2u);
    EXPECT_TRUE(s.contains({1, 3, 1}));
    EXPECT_FALSE(s.contains({0, 0, 1}));
}

TEST(LeftKernel, CombinationsVanish)
{
    oracle::Rng rng(15);
    Zp f(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = rng.uniform(1, 6), cols = rng.uniform(1, 4);
        std::vector<std::vector<Residue>> m(rows, std::vector<Residue>(cols));
        std::vector<std::vector<long long>> as_ll(rows, std::vector<long long>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                as_ll[i][j] = m[i][j] = static_cast<Residue>(rng.uniform(0, 2));
        auto kernel = left_kernel(f, m);
        EXPECT_EQ(kernel.size(), rows - oracle::reverse_pivot_rank(as_ll, 3));
        for (const auto& lambda : kernel)
            for (std::size_t j = 0; j < cols; ++j) {
                Residue s = 0;
                for (std::size_t i = 0; i < rows; ++i)
                    s = f.add(s, f.mul(lambda[i], m[i][j]));
                EXPECT_EQ(s, 0u);
            }
    }
}
