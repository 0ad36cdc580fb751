#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "invheat/errors.hpp"
#include "invheat/numerics/quadrature.hpp"

using namespace invheat;
using namespace invheat::numerics;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Quadrature, SineOverFullPeriodVanishes) {
    const double v = integrate([](double x) { return std::sin(2 * pi * x); }, 0, 1, QuadratureConfig::simpson(64));
    EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(Quadrature, WeightedSineMatchesClosedForm) {
    const double v = integrate([](double x) { return x * std::sin(2 * pi * x); }, 0, 1, QuadratureConfig::simpson(64));
    EXPECT_NEAR(v, -1.0 / (2 * pi), 1e-6);
}

TEST(Quadrature, LinearIsExactForBothRules) {
    auto f = [](double x) { return 2 * x; };
    EXPECT_NEAR(integrate(f, 0, 1, QuadratureConfig::simpson(2)), 1.0, 1e-15);
    EXPECT_NEAR(integrate(f, 0, 1, QuadratureConfig::trapezoid(3)), 1.0, 1e-15);
}

TEST(Quadrature, SimpsonIsExactOnCubics) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        const double c0 = c(rng), c1 = c(rng), c2 = c(rng), c3 = c(rng);
        const double lo = c(rng), hi = lo + 1 + std::abs(c(rng));
        auto f = [&](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); };
        auto prim = [&](double x) { return x * (c0 + x * (c1 / 2 + x * (c2 / 3 + x * c3 / 4))); };
        EXPECT_NEAR(integrate(f, lo, hi, QuadratureConfig::simpson(4)), prim(hi) - prim(lo), 1e-10);
    }
}

TEST(Quadrature, IsLinearInTheIntegrand) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(-2, 2);
    auto f = [](double x) { return std::exp(x) * std::cos(3 * x); };
    auto g = [](double x) { return 1 / (1 + x * x); };
    for (int trial = 0; trial < 10; ++trial) {
        const double al = c(rng), be = c(rng);
        for (auto cfg : {QuadratureConfig::simpson(64), QuadratureConfig::trapezoid(37)}) {
            const double lhs = integrate([&](double x) { return al * f(x) + be * g(x); }, 0, 1, cfg);
            const double rhs = al * integrate(f, 0, 1, cfg) + be * integrate(g, 0, 1, cfg);
            EXPECT_NEAR(lhs, rhs, 1e-12);
        }
    }
}

TEST(Quadrature, NodesReproduceIntegrate) {
    const auto cfg = QuadratureConfig::simpson(32);
    const auto q = make_nodes(0.0, 0.25, cfg);
    std::vector<double> v;
    for (double x : q.nodes) v.push_back(std::exp(4 * x));
    EXPECT_NEAR(q.apply(v), integrate([](double x) { return std::exp(4 * x); }, 0, 0.25, cfg), 1e-14);
    EXPECT_NEAR(q.apply(v), (std::exp(1.0) - 1) / 4, 1e-8);
}

TEST(Quadrature, RejectsBadConfigurations) {
    EXPECT_THROW(QuadratureConfig::simpson(7).validate(), DomainError);
    EXPECT_THROW(QuadratureConfig::trapezoid(1).validate(), DomainError);
    EXPECT_NO_THROW(QuadratureConfig::trapezoid(3).validate());
}

TEST(Quadrature, NonFiniteIntegrandReportsNode) {
    try {
        integrate([](double x) { return x > 0.49 && x < 0.51 ? NAN : 1.0; }, 0, 1, QuadratureConfig::simpson(4));
        FAIL() << "expected EvaluationError";
    } catch (const EvaluationError& e) {
        EXPECT_DOUBLE_EQ(e.location(), 0.5);
    }
}
