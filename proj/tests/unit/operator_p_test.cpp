#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "example.hpp"
#include "invheat/errors.hpp"
#include "invheat/spectral/bounds.hpp"
#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/operator_p.hpp"

using namespace invheat;
using namespace invheat::spectral;

namespace {
constexpr double pi = std::numbers::pi;

const SpectralCoefficients& example_coeffs() {
    static const auto c = SpectralCoefficients::compute(invheat::testing::paper_example(), 64);
    return c;
}
}  // namespace

TEST(OperatorP, InitialValueIsDataOnly) {
    const auto& p = invheat::testing::paper_example();
    for (double guess : {0.5, 1.0, 30.0}) {
        const auto a = CoefficientTrajectory::constant(0.25, 256, guess);
        const auto pa = apply_P(a, example_coeffs(), p.energy);
        EXPECT_NEAR(pa.values().front(), 1 + 1 / (4 * pi * pi), 1e-6);
    }
}

TEST(OperatorP, ExactDiffusivityIsNearlyFixed) {
    const auto& p = invheat::testing::paper_example();
    const auto a = CoefficientTrajectory::sample(invheat::testing::example_a, 0.25, 1024);
    const auto pa = apply_P(a, example_coeffs(), p.energy);
    double worst = 0;
    for (std::size_t j = 0; j < a.times().size(); ++j) {
        worst = std::max(worst, std::abs(pa.values()[j] - a.values()[j]));
    }
    EXPECT_LE(worst, 1e-3);
}

TEST(OperatorP, IncreasesWhenEnergyFallsFaster) {
    const auto& p = invheat::testing::paper_example();
    const auto steeper = problem::TimeSignal::from_functions([&](double t) { return p.energy(t) - 0.01 * t; },
                                                             [&](double t) { return p.energy.derivative(t) - 0.01; });
    const auto a = CoefficientTrajectory::constant(0.25, 128, 2.0);
    const auto base = apply_P(a, example_coeffs(), p.energy);
    const auto more = apply_P(a, example_coeffs(), steeper);
    for (std::size_t j = 0; j < base.values().size(); ++j) EXPECT_GT(more.values()[j], base.values()[j]);
}

TEST(OperatorP, NeverFallsBelowLowerBandEdge) {
    const auto& p = invheat::testing::paper_example();
    const auto b = stability_bounds(example_coeffs(), p.energy);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> level(b.lo, b.hi);
    std::uniform_real_distribution<double> phase(0, 2 * pi);
    const FixedPointOperator op(example_coeffs(), p.energy, CoefficientTrajectory::constant(0.25, 256, 1).times());
    for (int trial = 0; trial < 20; ++trial) {
        const double base = level(rng), ph = phase(rng);
        const double amp = 0.5 * std::min(base - b.lo, b.hi - base);
        const auto a = CoefficientTrajectory::sample(
            [&](double t) { return base + amp * std::sin(8 * pi * t + ph); }, 0.25, 256);
        const auto pa = op.evaluate(a);
        EXPECT_GE(*std::min_element(pa.begin(), pa.end()), b.lo) << "trial " << trial;
    }
}

// The upper edge C1/C2 is not invariant: a constant at the top of the band
// is mapped above it near t = 0, where the denominator is still close to its
// initial value while the numerator is at its largest.
TEST(OperatorP, UpperBandEdgeIsNotInvariant) {
    const auto& p = invheat::testing::paper_example();
    const auto b = stability_bounds(example_coeffs(), p.energy);
    const auto a = CoefficientTrajectory::constant(0.25, 256, b.hi);
    const auto pa = FixedPointOperator(example_coeffs(), p.energy, a.times()).evaluate(a);
    EXPECT_GT(*std::max_element(pa.begin(), pa.end()), b.hi);
}

TEST(OperatorP, VanishingEvenSpectrumIsDegenerate) {
    const auto p = invheat::testing::parse("phi = 2 + cos(2*pi*x)\nF = 0\nE = 2\nT = 1/4\n");
    const auto coeffs = SpectralCoefficients::compute(p, 8);
    const auto a = CoefficientTrajectory::constant(0.25, 16, 1.0);
    EXPECT_THROW(apply_P(a, coeffs, p.energy), DegenerateProblemError);
}

TEST(OperatorP, MomentSums) {
    const std::vector<double> v{9, 9, 1, 9, 2};
    EXPECT_NEAR(even_moment_sum(v), 2 / pi + 2 * 2 / (2 * pi), 1e-15);
    EXPECT_NEAR(even_slope_sum(v), 8 * pi + 8 * pi * 2 * 2, 1e-12);
}
