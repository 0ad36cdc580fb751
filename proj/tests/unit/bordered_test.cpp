#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dense_oracle.hpp"
#include "invheat/errors.hpp"
#include "invheat/numerics/bordered.hpp"

using namespace invheat;
using namespace invheat::numerics;

namespace {

BorderedTridiagonalMatrix identity(std::size_t m) {
    BorderedTridiagonalMatrix a(m);
    std::fill(a.main.begin(), a.main.end(), 1.0);
    return a;
}

// CN system for h = 1/4, tau and a such that R = 1.
BorderedTridiagonalMatrix cn_matrix(std::size_t m, double r) {
    BorderedTridiagonalMatrix a(m);
    std::fill(a.main.begin(), a.main.end(), -2 * (1 + r));
    std::fill(a.lower.begin(), a.lower.end(), 1.0);
    std::fill(a.upper.begin(), a.upper.end(), 1.0);
    a.lower.back() = 2.0;
    a.top_right = 1.0;
    return a;
}

double max_rel_diff(const std::vector<double>& x, const std::vector<double>& y) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num = std::max(num, std::abs(x[i] - y[i]));
        den = std::max(den, std::abs(y[i]));
    }
    return num / std::max(den, 1e-300);
}

}  // namespace

TEST(Bordered, IdentityReturnsRightHandSide) {
    const std::vector<double> b{1.5, -2, 3, 0.25, 7};
    EXPECT_EQ(solve_bordered(identity(5), b), b);
}

TEST(Bordered, SmallCnSystemMatchesDenseOracle) {
    const auto a = cn_matrix(4, 1.0);
    EXPECT_DOUBLE_EQ(a.at(0, 3), 1.0);
    EXPECT_DOUBLE_EQ(a.at(3, 2), 2.0);
    EXPECT_DOUBLE_EQ(a.at(1, 1), -4.0);
    EXPECT_DOUBLE_EQ(a.at(2, 0), 0.0);
    const std::vector<double> b{1, 2, 3, 4};
    const auto x = solve_bordered(a, b);
    const auto ref = invheat::testing::dense_solve(a.to_dense(), b);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(x[i], ref[i], 1e-14);
    EXPECT_LE(residual_inf(a, x, b), 1e-13);
}

TEST(Bordered, RandomSystemOfFiftyUnknowns) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    const auto a = invheat::testing::random_dominant(50, rng);
    std::vector<double> b(50);
    for (auto& v : b) v = u(rng);
    const auto x = solve_bordered(a, b);
    const auto ref = invheat::testing::dense_solve(a.to_dense(), b);
    for (std::size_t i = 0; i < 50; ++i) EXPECT_NEAR(x[i], ref[i], 1e-9);
}

class BorderedRandom : public ::testing::TestWithParam<std::size_t> {};

TEST_P(BorderedRandom, AgreesWithDenseEliminationOnHundredInstances) {
    const std::size_t m = GetParam();
    std::mt19937_64 rng(12345 + m);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = invheat::testing::random_dominant(m, rng);
        std::vector<double> b(m);
        for (auto& v : b) v = u(rng);
        const auto x = solve_bordered(a, b);
        const auto ref = invheat::testing::dense_solve(a.to_dense(), b);
        ASSERT_LE(max_rel_diff(x, ref), 1e-10) << "trial " << trial;
    }
}

INSTANTIATE_TEST_SUITE_P(Sizes, BorderedRandom, ::testing::Values(4u, 16u, 128u));

TEST(Bordered, PivotingHandlesZeroLeadingDiagonal) {
    BorderedTridiagonalMatrix a(4);
    a.main = {0, 3, 4, 5};
    a.lower = {1, 1, 2};
    a.upper = {1, 1, 1};
    a.top_right = 1;
    const std::vector<double> b{1, 0, -1, 2};
    const auto x = solve_bordered(a, b);
    EXPECT_LE(residual_inf(a, x, b), 1e-13);
}

TEST(Bordered, SingularMatrixReportsPivot) {
    BorderedTridiagonalMatrix a(4);
    a.main = {1, 1, 0, 0};
    a.lower = {0, 0, 0};
    a.upper = {0, 0, 0};
    try {
        solve_bordered(a, std::vector<double>{1, 1, 1, 1});
        FAIL() << "expected SingularMatrixError";
    } catch (const SingularMatrixError& e) {
        EXPECT_EQ(e.pivot_index(), 2u);
    }
}

TEST(Bordered, RejectsShapeErrors) {
    BorderedTridiagonalMatrix a(4);
    a.lower.pop_back();
    EXPECT_THROW(a.validate(), DomainError);
    EXPECT_THROW(solve_bordered(identity(4), std::vector<double>{1, 2, 3}), DomainError);
}

TEST(Bordered, MultiplyMatchesDense) {
    std::mt19937_64 rng(5);
    const auto a = invheat::testing::random_dominant(9, rng);
    const auto dense = a.to_dense();
    std::vector<double> x(9);
    for (std::size_t i = 0; i < 9; ++i) x[i] = 0.5 * static_cast<double>(i) - 1;
    const auto y = a.multiply(x);
    for (std::size_t i = 0; i < 9; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < 9; ++j) s += dense[i * 9 + j] * x[j];
        EXPECT_NEAR(y[i], s, 1e-13);
    }
}
