#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "toda/content.hpp"
#include "toda/hierarchy.hpp"

using namespace toda;

namespace {

YMonomial Y(int m, int k) { return shifted_content_product(m, k); }

TEST(Content, ShiftedContentProduct)
{
    for (int m = -3; m <= 3; ++m)
        EXPECT_EQ(Y(m, 0), YMonomial::one());
    EXPECT_EQ(Y(2, 2), YMonomial::y(2) * YMonomial::y(1));
    EXPECT_EQ(Y(0, -2), YMonomial::y(2, -1) * YMonomial::y(1, -1));
    EXPECT_EQ(Y(0, -2), Y(2, 2).inverse());
}

TEST(Content, ContentMonomial)
{
    for (int n = -3; n <= 3; ++n)
        EXPECT_EQ(content_monomial(Partition{}, n), YMonomial::one());
    EXPECT_EQ(content_monomial(Partition{2, 1}, 0), YMonomial::y(0) * YMonomial::y(1) * YMonomial::y(-1));
    EXPECT_EQ(content_monomial(Partition{1}, 2), YMonomial::y(2));
}

TEST(Content, Theta)
{
    EXPECT_EQ(theta(0), YMonomial::a());
    EXPECT_EQ(theta(1), YMonomial::a() * YMonomial::b() * YMonomial::y0_half_power(1));
    EXPECT_EQ(theta(2) / theta(1), YMonomial::b() * YMonomial::y0_half_power(1) * YMonomial::y(1));
    // Y(-1,-1)^{-1} = y_0
    EXPECT_EQ(theta(-1), YMonomial::a() * YMonomial::b(-1) * YMonomial::y0_half_power(1));
}

TEST(Content, PhiCoefficients)
{
    EXPECT_EQ(phi_coeff(0, Partition{}), YMonomial::a());
    for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(phi_coeff(0, Partition{m + 1}) / phi_coeff(0, Partition{m}), YMonomial::y(m));
        const Partition col(std::vector<int>(m, 1));
        const Partition col_next(std::vector<int>(m + 1, 1));
        EXPECT_EQ(phi_coeff(0, col_next) / phi_coeff(0, col), YMonomial::y(-m));
    }
}

TEST(ContentIdentity, RatiosOfShiftedProducts)
{
    for (int s = -6; s <= 6; ++s)
        for (int k = -6; k <= 6; ++k)
            for (int j = -6; j <= 6; ++j) {
                EXPECT_EQ(Y(s, k) / Y(s, j), Y(s - j, k - j));
                EXPECT_EQ(Y(s, k) / Y(s, j), Y(s - k, j - k).inverse());
            }
}

TEST(ContentIdentity, DiagonalRatio)
{
    for (int j = -6; j <= 6; ++j)
        for (int k = -6; k <= 6; ++k)
            EXPECT_EQ(Y(j, j) / Y(k, k), Y(j, j - k));
}

TEST(ContentIdentity, ShiftedRatio)
{
    for (int s = -6; s <= 6; ++s)
        for (int j = 0; j <= 6; ++j)
            for (int k = 0; k <= 6; ++k)
                EXPECT_EQ(Y(s + j - k, j) / Y(s, k), Y(s + j - k, j - k));
}

TEST(ContentIdentity, ConstantRatio)
{
    for (int m = -6; m <= 6; ++m)
        EXPECT_EQ(theta(m + 1) / theta(m), YMonomial::b() * YMonomial::y0_half_power(1) * Y(m, m)) << m;
}

TEST(ContentIdentity, UpArrowRatio)
{
    for (const auto& lambda : partitions_up_to(6))
        for (int i = 1; i <= 8; ++i)
            for (int n = -4; n <= 4; ++n) {
                const int d = raise(lambda, i).size() - lambda.size();
                EXPECT_EQ(content_monomial(raise(lambda, i), n) / content_monomial(lambda, n - 1), Y(d + n - 1, d));
            }
}

TEST(ContentIdentity, DownArrowRatio)
{
    for (const auto& mu : partitions_up_to(6))
        for (int j = 1; j <= 8; ++j)
            for (int m = -4; m <= 4; ++m) {
                const int d = mu.size() - lower(mu, j).size();
                EXPECT_EQ(content_monomial(mu, m + 1) / content_monomial(lower(mu, j), m), Y(d + m, d));
            }
}

TEST(ContentProperty, RowWiseEqualsCellWise)
{
    for (const auto& lambda : partitions_up_to(8))
        for (int n = -5; n <= 5; ++n)
            EXPECT_EQ(content_monomial(lambda, n), content_monomial_cellwise(lambda, n));
}

TEST(ContentProperty, CellWiseAgainstDiagramWalk)
{
    for (const auto& lambda : partitions_up_to(7)) {
        YMonomial walk = YMonomial::one();
        for (int c : oracle::cell_contents(lambda))
            walk *= YMonomial::y(c + 2);
        EXPECT_EQ(content_monomial(lambda, 2), walk);
    }
}

TEST(ContentProperty, PhiSolvesTheDiagonalConstraints)
{
    DiagonalFamily<YMonomial> phi{[](int n, const Partition& l) { return phi_coeff(n, l); }, "phi"};
    SweepBounds bounds;
    bounds.max_size = 3;
    bounds.level_lo = -2;
    bounds.level_hi = 2;
    const auto report = diagonal_sweep(phi, bounds);
    EXPECT_GT(report.total, 0u);
    EXPECT_TRUE(report.ok());
}

}  // namespace
