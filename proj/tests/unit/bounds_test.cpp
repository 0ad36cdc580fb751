#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "example.hpp"
#include "invheat/errors.hpp"
#include "invheat/spectral/bounds.hpp"
#include "invheat/spectral/coefficients.hpp"

using namespace invheat;
using namespace invheat::spectral;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Bounds, ExampleConstantsMatchClosedForms) {
    const auto& p = invheat::testing::paper_example();
    const auto coeffs = SpectralCoefficients::compute(p, 64);
    const auto b = stability_bounds(coeffs, p.energy);
    EXPECT_NEAR(b.c[2], std::exp(-0.25) / (2 * pi), 1e-6);
    EXPECT_NEAR(b.c[2], 0.12395, 1e-5);
    EXPECT_NEAR(b.c[3], 8 * pi * (0.25 + pi * pi * (std::exp(0.75) - 1) / 3), 1e-6);
    EXPECT_NEAR(b.c[4], 4 * std::pow(2 * pi, 3) * 0.25, 1e-6);
    EXPECT_TRUE(b.valid());
    EXPECT_NEAR(b.lo, b.c[0] / b.c[3], 1e-15);
    EXPECT_NEAR(b.hi, b.c[1] / b.c[2], 1e-12);
    EXPECT_LT(b.lo, invheat::testing::example_a(0));
    EXPECT_GT(b.hi, invheat::testing::example_a(0.25));
    EXPECT_LE(b.t0, 0.25);
    EXPECT_EQ(b.horizon, 0.25);
}

TEST(Bounds, TimeIndependentNumeratorGivesEqualExtremes) {
    const auto p = invheat::testing::parse("phi = (1-x)*sin(2*pi*x)\nF = 0\nE = 1/(2*pi) - t/10\nT = 1/4\n");
    const auto coeffs = SpectralCoefficients::compute(p, 16);
    const auto b = stability_bounds(coeffs, p.energy);
    EXPECT_NEAR(b.c[0], b.c[1], 1e-9);
    EXPECT_NEAR(b.c[0], 0.1, 1e-9);
}

TEST(Bounds, IncreasingEnergyViolatesLowerConstant) {
    const auto p = invheat::testing::parse("phi = (1-x)*sin(2*pi*x)\nF = 0\nE = 1/(2*pi) + t\nT = 1/4\n");
    const auto coeffs = SpectralCoefficients::compute(p, 16);
    try {
        stability_bounds(coeffs, p.energy);
        FAIL() << "expected AssumptionViolation";
    } catch (const AssumptionViolation& e) {
        EXPECT_EQ(e.constant(), "C0");
    }
    EXPECT_FALSE(compute_stability_constants(coeffs, p.energy).valid());
}

TEST(Bounds, AlphaOutsideUnitIntervalRejected) {
    const auto& p = invheat::testing::paper_example();
    const auto coeffs = SpectralCoefficients::compute(p, 8);
    EXPECT_THROW(stability_bounds(coeffs, p.energy, 0.0), DomainError);
    EXPECT_THROW(stability_bounds(coeffs, p.energy, 1.0), DomainError);
}
