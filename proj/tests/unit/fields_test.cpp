#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "invheat/problem/fields.hpp"

using namespace invheat::problem;

namespace {
constexpr double w = 2 * std::numbers::pi;
}

TEST(Fields, FornbergWeightsForCentralSecondDerivative) {
    const std::vector<double> nodes{-1, 0, 1};
    const auto c = fd_weights(nodes, 0.0, 2);
    EXPECT_NEAR(c[0], 1.0, 1e-14);
    EXPECT_NEAR(c[1], -2.0, 1e-14);
    EXPECT_NEAR(c[2], 1.0, 1e-14);
}

TEST(Fields, FunctionDerivativesStayInsideInterval) {
    auto f = [](double x) {
        if (x < 0 || x > 1) throw std::logic_error("stencil left [0,1]");
        return (1 - x) * std::sin(w * x);
    };
    const auto phi = ScalarField1D::from_function(f);
    EXPECT_NEAR(phi.derivative(1, 1.0), -std::sin(w), 1e-6);
    EXPECT_NEAR(phi.derivative(1, 0.0), w, 1e-6);
    EXPECT_NEAR(phi.derivative(2, 0.0), -2 * w, 1e-4);
}

TEST(Fields, ExpressionFieldUsesSymbolicDerivatives) {
    const auto phi = ScalarField1D::from_expression(Expression::parse("(1-x)*sin(2*pi*x)"));
    EXPECT_NEAR(phi.derivative(1, 1.0), 0.0, 1e-14);
    EXPECT_NEAR(phi.derivative(2, 0.0), -2 * w, 1e-12);
    EXPECT_NEAR(phi.derivative(2, 1.0), -2 * w, 1e-12);
    ASSERT_TRUE(phi.expression().has_value());
}

TEST(Fields, TimeSignalDerivatives) {
    const auto e = TimeSignal::from_function([](double t) { return std::exp(-t) / w; }, 0.25);
    for (double t : {0.0, 0.1, 0.25}) EXPECT_NEAR(e.derivative(t), -std::exp(-t) / w, 1e-8);

    std::vector<double> ts, vs;
    for (int j = 0; j <= 200; ++j) {
        ts.push_back(0.25 * j / 200);
        vs.push_back(std::exp(-ts.back()) / w);
    }
    const auto s = TimeSignal::from_samples(ts, vs);
    EXPECT_NEAR(s(0.1), std::exp(-0.1) / w, 1e-7);
    EXPECT_NEAR(s.derivative(0.1), -std::exp(-0.1) / w, 1e-6);

    const auto both = TimeSignal::from_functions([](double t) { return t * t; }, [](double t) { return 2 * t; });
    EXPECT_DOUBLE_EQ(both.derivative(0.3), 0.6);
}

TEST(Fields, SourceFieldXDerivative) {
    const auto f = SourceField::from_function([](double x, double t) { return std::cos(w * x) * std::exp(t); });
    EXPECT_NEAR(f.x_derivative(1, 0.25, 0.1), -w * std::exp(0.1), 1e-6);
    EXPECT_NEAR(f.x_derivative(2, 0.0, 0.0), -w * w, 1e-3);
}
