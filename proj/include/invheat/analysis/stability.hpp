#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "invheat/problem/problem.hpp"
#include "invheat/spectral/inverse.hpp"

namespace invheat::analysis {

struct PerturbationResult {
    double delta = 0.0;
    bool feasible = true;
    double a_deviation = 0.0;  ///< ‖a − ā‖∞ on the trajectory grid
    double u_deviation = 0.0;  ///< ‖u − ū‖∞ on the output grid
    std::optional<double> a_ratio;  ///< a_deviation/δ, δ > 0 only
    std::optional<double> u_ratio;
    std::string note;
};

struct StabilityReport {
    std::vector<PerturbationResult> results;  ///< in input order
    bool monotone = true;        ///< deviations nondecreasing in δ over feasible runs
    double ratio_spread = 0.0;   ///< max/min of a_ratio over feasible δ > 0 (1 when fewer than two)
    bool bounded = true;         ///< ratio_spread <= 4
    bool zero_is_exact = true;   ///< every δ = 0 run reproduced the base solution bit for bit
    std::uint64_t seed = 0;
};

/// E with δ·sin(πt/T) added, which leaves E(0) unchanged.
problem::ProblemData perturb_energy(const problem::ProblemData& p, double delta);

/// Re-solves the spectral inverse problem with E replaced by the perturbed
/// signal for each δ and compares with the unperturbed solution. A δ whose
/// E′ is not negative everywhere, or whose solve fails, is recorded as
/// infeasible. The perturbation is deterministic; `seed` is carried into
/// the report for provenance only.
StabilityReport stability_experiment(const problem::ProblemData& p, const std::vector<double>& deltas,
                                     std::uint64_t seed, const spectral::SpectralOptions& options = {});

}  // namespace invheat::analysis
