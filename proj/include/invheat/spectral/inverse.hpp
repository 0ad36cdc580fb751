#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/assumptions.hpp"
#include "invheat/problem/problem.hpp"
#include "invheat/spectral/bounds.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::spectral {

struct SpectralOptions {
    int truncation = default_truncation;
    numerics::QuadratureConfig x_quad = numerics::QuadratureConfig::simpson(numerics::default_x_panels);
    numerics::QuadratureConfig t_quad = numerics::QuadratureConfig::simpson(numerics::default_t_panels);
    int time_cells = 1024;   ///< trajectory grid on [0,T]
    int output_x_cells = 100;
    double tol = 1e-6;       ///< sup-norm change between Picard iterates
    int max_iter = 20000;
    double alpha = 0.5;      ///< uniqueness-horizon safety factor, in (0,1)
    double damping = 1.0;    ///< θ in a ← a + θ(P[a] − a)
    bool auto_damp = false;  ///< halve θ whenever the change grows
    bool force = false;      ///< proceed when the assumptions fail
    int validate_k_max = 64;
};

struct SpectralDiagnostics {
    int iterations = 0;
    double final_change = 0.0;
    std::vector<double> change_history;
    double final_damping = 1.0;
    StabilityBounds bounds;
    bool uniqueness_certified = false;
    double tail_estimate = 0.0;
    std::optional<problem::AssumptionReport> assumptions;
    std::vector<std::string> warnings;
};

struct SpectralSolution {
    CoefficientTrajectory a;
    TemperatureField u;  ///< on output_x_cells+1 points times the trajectory grid
    SpectralDiagnostics diagnostics;
};

/// Picard iteration a ← P[a] from the constant midpoint of the admissible
/// band, stopped when successive iterates differ by at most tol; u is then
/// synthesized from the modes driven by the final iterate.
///
/// Throws AssumptionViolation when the data fail validation (unless
/// `force`), DegenerateProblemError when the even spectrum vanishes, and
/// ConvergenceError with the change history after max_iter iterations.
SpectralSolution solve_inverse_spectral(const problem::ProblemData& p, const SpectralOptions& options = {});

SpectralSolution solve_inverse_spectral(const problem::ProblemData& p, int truncation,
                                        const numerics::QuadratureConfig& quad, double tol, int max_iter);

}  // namespace invheat::spectral
