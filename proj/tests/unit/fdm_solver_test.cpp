#include <gtest/gtest.h>

#include <cmath>

#include "example.hpp"
#include "invheat/analysis/consistency.hpp"
#include "invheat/analysis/convergence.hpp"
#include "invheat/fdm/solver.hpp"

using namespace invheat;
using namespace invheat::fdm;

namespace {

const DiscreteSolution& reference_run() {
    static const DiscreteSolution s = run_inverse_fdm(invheat::testing::paper_example(), FdmGrid(200, 200, 0.25));
    return s;
}

double max_u_error(const spectral::TemperatureField& u) {
    double worst = 0;
    for (std::size_t j = 0; j < u.t.size(); ++j) {
        for (std::size_t i = 0; i < u.x.size(); ++i) {
            worst = std::max(worst, std::abs(u.values[j][i] - invheat::testing::example_u(u.x[i], u.t[j])));
        }
    }
    return worst;
}

}  // namespace

TEST(FdmInverse, RecoversDiffusivity) {
    const auto& s = reference_run();
    double worst = 0;
    for (int j = 0; j <= s.grid.n(); ++j) {
        const double exact = invheat::testing::example_a(s.grid.t(j));
        worst = std::max(worst, std::abs(s.a[j] - exact) / exact);
    }
    EXPECT_LE(worst, 0.05);
    EXPECT_TRUE(s.warnings.empty());
    EXPECT_TRUE(s.nonpositive_levels.empty());
}

TEST(FdmInverse, RecoversTemperature) {
    const auto f = reference_run().field();
    EXPECT_EQ(f.x.size(), 201u);
    EXPECT_LE(max_u_error(f), 0.03);
}

TEST(FdmInverse, ClosuresHoldExactly) {
    const auto& s = reference_run();
    const int m = s.grid.m();
    for (const auto& row : s.u) {
        ASSERT_EQ(row.size(), static_cast<std::size_t>(m + 2));
        EXPECT_EQ(row[0], row[m]);
        EXPECT_EQ(row[m + 1], row[m - 1]);
    }
}

TEST(FdmInverse, LinearSolvesAreAccurate) {
    EXPECT_LE(reference_run().max_solve_residual, 1e-10);
}

TEST(FdmInverse, CorrectorIsIdleAtConvergedLevel) {
    const auto& p = invheat::testing::paper_example();
    const auto& s = reference_run();
    for (int j : {0, 69, 199}) {
        const auto r = corrector_pass(p, s.grid, j, s.a[j], s.u[j], s.a[j + 1], s.u[j + 1], FdmOptions{});
        EXPECT_LE(r.change, 1e-7) << "level " << j;
    }
}

TEST(FdmInverse, LiteralConfigurationStillRuns) {
    FdmOptions literal;
    literal.gradient = GradientRule::forward;
    literal.coefficient = CoefficientRule::corrector;
    const auto s = run_inverse_fdm(invheat::testing::paper_example(), FdmGrid(100, 100, 0.25), literal);
    EXPECT_EQ(s.a.size(), 101u);
    EXPECT_LE(std::abs(s.a[0] - invheat::testing::example_a(0)) / invheat::testing::example_a(0), 0.05);
}

TEST(FdmInverse, MassDriftShrinksUnderRefinement) {
    const auto& p = invheat::testing::paper_example();
    double previous = INFINITY;
    for (int m : {50, 100, 200}) {
        const auto s = run_inverse_fdm(p, FdmGrid(m, m, 0.25));
        const auto r = analysis::check_consistency(s.field(), p.energy);
        EXPECT_LT(r.max_drift, previous) << "M = " << m;
        previous = r.max_drift;
    }
}

TEST(FdmForward, ExactDiffusivityGivesSmallError) {
    const auto& p = invheat::testing::paper_example();
    const auto a = spectral::CoefficientTrajectory::sample(invheat::testing::example_a, 0.25, 1024);
    const auto u = run_forward_fdm(p, a, FdmGrid(200, 200, 0.25));
    EXPECT_LE(max_u_error(u), 5e-3);
}

TEST(FdmForward, SecondOrderUnderRefinement) {
    const std::vector<analysis::StudyLevel> levels{{50, 50}, {100, 100}, {200, 200}};
    const auto r = analysis::convergence_study(invheat::testing::paper_example(), analysis::StudyMethod::fdm_forward, levels);
    ASSERT_EQ(r.u_order.size(), 3u);
    for (std::size_t i = 1; i < 3; ++i) {
        ASSERT_TRUE(r.u_order[i].has_value());
        EXPECT_GE(*r.u_order[i], 1.7);
        EXPECT_LE(*r.u_order[i], 2.3);
    }
}

TEST(FdmGuard, ScalesWithSolution) {
    EXPECT_DOUBLE_EQ(division_guard({0.1, -0.5}), 1e-10);
    EXPECT_DOUBLE_EQ(division_guard({0.1, -50.0}), 5e-9);
}
