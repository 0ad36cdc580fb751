#pragma once

#include <string>
#include <vector>

#include "invheat/fdm/grid.hpp"
#include "invheat/fdm/scheme.hpp"
#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/problem.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::fdm {

/// Diffusivity used in the corrector solve for level j+1 at inner step s+1:
enum class CoefficientRule {
    corrector,      ///< (a^{j+1(s+1)} + a^{j+1(s)})/2, both inner iterates
    level_average,  ///< (a^{j+1(s+1)} + a^j)/2, the Crank–Nicolson average
};

/// How the inner iteration predicts a^{j+1}.
enum class AFormula {
    pointwise,  ///< (−E′ + ∫F dx) h / (boundary difference), at t_{j+1}
    balance,    ///< the value that makes h·Σ u_i change by exactly E(t_{j+1}) − E(t_j)
};

struct FdmOptions {
    double inner_tol = 1e-8;
    int max_inner = 100;
    GradientRule gradient = GradientRule::second_order;
    CoefficientRule coefficient = CoefficientRule::level_average;
    AFormula a_formula = AFormula::pointwise;
    numerics::QuadratureConfig fin_quad = numerics::QuadratureConfig::simpson(numerics::default_x_panels);
};

/// Output of the predictor–corrector march.
struct DiscreteSolution {
    FdmGrid grid;
    std::vector<double> a;                 ///< a^j, j = 0..N
    std::vector<std::vector<double>> u;    ///< u[j][i], i = 0..M+1
    std::vector<int> inner_iterations;     ///< per level j = 1..N (entry 0 is 0)
    std::vector<double> inner_change;      ///< last inner change per level
    double max_solve_residual = 0.0;       ///< worst ‖Ax−b‖∞/‖b‖∞ over all solves
    std::vector<std::size_t> nonpositive_levels;  ///< levels where some a iterate was <= 0
    std::vector<std::string> warnings;

    std::vector<double> times() const;
    /// u on x_0..x_M (the fictitious column dropped).
    spectral::TemperatureField field() const;
};

/// Quantities of the a-formula at one level: E(t_j), E′(t_j) and ∫F(x,t_j)dx.
struct LevelData {
    double e = 0.0;
    double et = 0.0;
    double fin = 0.0;
};

LevelData level_data(const problem::ProblemData& p, double t, const numerics::QuadratureConfig& quad);

/// One inner step at level j+1: predict a from the current iterate, then
/// solve the Crank–Nicolson system from level j with the chosen coefficient.
struct CorrectorResult {
    double a = 0.0;
    std::vector<double> u;  ///< i = 0..M+1
    double change = 0.0;    ///< max(|Δa|, ‖Δu‖∞) against the input iterate
    double solve_residual = 0.0;
};

CorrectorResult corrector_pass(const problem::ProblemData& p, const FdmGrid& grid, int level, double a_old,
                               const std::vector<double>& u_old, double a_iterate,
                               const std::vector<double>& u_iterate, const FdmOptions& options);

/// Predictor–corrector march from u^0 = φ. Inner non-convergence is recorded
/// as a warning; FlatGradientError, SingularMatrixError and DomainError (for
/// a non-positive coefficient sum) propagate.
DiscreteSolution run_inverse_fdm(const problem::ProblemData& p, const FdmGrid& grid, const FdmOptions& options = {});

DiscreteSolution run_inverse_fdm(const problem::ProblemData& p, const FdmGrid& grid, double inner_tol, int max_inner);

/// Crank–Nicolson march with a known diffusivity (no corrector loop).
spectral::TemperatureField run_forward_fdm(const problem::ProblemData& p, const spectral::CoefficientTrajectory& a,
                                           const FdmGrid& grid);

/// Division guard 1e-10·max(1, ‖u‖∞).
double division_guard(const std::vector<double>& u);

}  // namespace invheat::fdm
