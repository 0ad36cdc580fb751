#include <gtest/gtest.h>

#include <cmath>

#include "example.hpp"
#include "invheat/analysis/consistency.hpp"
#include "invheat/errors.hpp"
#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/forward.hpp"
#include "invheat/spectral/inverse.hpp"

using namespace invheat;
using namespace invheat::spectral;

namespace {

const SpectralSolution& example_solution() {
    static const SpectralSolution s = solve_inverse_spectral(invheat::testing::paper_example());
    return s;
}

}  // namespace

TEST(SpectralInverse, RecoversDiffusivity) {
    const auto& s = example_solution();
    double worst = 0;
    for (std::size_t j = 0; j < s.a.times().size(); ++j) {
        const double exact = invheat::testing::example_a(s.a.times()[j]);
        worst = std::max(worst, std::abs(s.a.values()[j] - exact) / exact);
    }
    EXPECT_LE(worst, 2e-3);
    EXPECT_LE(s.diagnostics.final_change, 1e-6);
    EXPECT_GT(s.diagnostics.iterations, 1);
}

TEST(SpectralInverse, RecoversTemperature) {
    const auto& s = example_solution();
    s.u.validate();
    EXPECT_EQ(s.u.x.size(), 101u);
    double worst = 0;
    for (std::size_t j = 0; j < s.u.t.size(); ++j) {
        for (std::size_t i = 0; i < s.u.x.size(); ++i) {
            worst = std::max(worst, std::abs(s.u.values[j][i] - invheat::testing::example_u(s.u.x[i], s.u.t[j])));
        }
    }
    EXPECT_LE(worst, 1e-4);
}

TEST(SpectralInverse, HonoursOverdeterminationAndClosures) {
    const auto& s = example_solution();
    const auto r = analysis::check_consistency(s.u, invheat::testing::paper_example().energy,
                                               numerics::QuadratureRule::composite_simpson);
    EXPECT_LE(r.max_drift, 10 * 1e-6);
    EXPECT_LE(r.max_periodic_gap, 1e-6);
}

TEST(SpectralInverse, EndSlopeVanishes) {
    // The slope is taken from the series on a fine one-sided stencil; the
    // output grid itself is too coarse to resolve 1e-4.
    const auto& s = example_solution();
    const auto coeffs = SpectralCoefficients::compute(invheat::testing::paper_example(), 64);
    const double d = 1e-3;
    const std::vector<double> xs{1 - 2 * d, 1 - d, 1.0};
    const auto u = forward_solve(s.a, coeffs, xs, s.a.times());
    double worst = 0;
    for (const auto& row : u.values) {
        worst = std::max(worst, std::abs((3 * row[2] - 4 * row[1] + row[0]) / (2 * d)));
    }
    EXPECT_LE(worst, 1e-4);
}

TEST(SpectralInverse, DiagnosticsAreFilled) {
    const auto& d = example_solution().diagnostics;
    EXPECT_TRUE(d.bounds.valid());
    ASSERT_TRUE(d.assumptions.has_value());
    EXPECT_TRUE(d.assumptions->all_pass());
    EXPECT_EQ(static_cast<int>(d.change_history.size()), d.iterations);
    EXPECT_EQ(d.uniqueness_certified, d.bounds.uniqueness_certified());
}

TEST(SpectralInverse, DegenerateSpectrumRaises) {
    const auto p = invheat::testing::parse("phi = 2\nF = 0\nE = 2\nT = 1/4\n");
    EXPECT_THROW(solve_inverse_spectral(p), DegenerateProblemError);
}

TEST(SpectralInverse, InvalidDataRaisesUnlessForced) {
    const auto p = invheat::testing::parse("phi = (1-x)*sin(2*pi*x)\nF = 0\nE = 1/(2*pi) + t\nT = 1/4\n");
    EXPECT_THROW(solve_inverse_spectral(p), AssumptionViolation);
    SpectralOptions forced;
    forced.force = true;
    forced.max_iter = 50;
    // With E increasing, P produces a negative diffusivity on the first step.
    EXPECT_THROW(solve_inverse_spectral(p, forced), Error);
}

TEST(SpectralInverse, IterationBudgetExhaustionReportsHistory) {
    SpectralOptions opts;
    opts.max_iter = 5;
    opts.truncation = 8;
    try {
        solve_inverse_spectral(invheat::testing::paper_example(), opts);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_EQ(e.residual_history().size(), 5u);
    }
}
