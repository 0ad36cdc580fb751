#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "invheat/fdm/solver.hpp"
#include "invheat/problem/problem.hpp"
#include "invheat/spectral/inverse.hpp"

namespace invheat::analysis {

enum class StudyMethod { fdm_forward, fdm_inverse, spectral };

std::string_view to_string(StudyMethod m);
/// Accepts "fdm-forward", "fdm-inverse", "spectral".
std::optional<StudyMethod> parse_study_method(std::string_view text);

/// Finite differences: M cells and N steps. Spectral: `resolution` is K and
/// `steps` is ignored.
struct StudyLevel {
    int resolution = 0;
    int steps = 0;
};

struct LevelError {
    StudyLevel level;
    double h = 0.0;                  ///< 1/M, or 1/K for the spectral method
    std::optional<double> a_error;   ///< sup |a − a_exact|; absent in forward mode
    double u_error = 0.0;            ///< sup |u − u_exact| over the native grid
};

struct ConvergenceResult {
    StudyMethod method = StudyMethod::fdm_forward;
    std::vector<LevelError> levels;               ///< coarse to fine
    std::vector<std::optional<double>> a_order;   ///< entry i compares levels i-1 and i
    std::vector<std::optional<double>> u_order;
};

struct StudyOptions {
    spectral::SpectralOptions spectral;
    fdm::FdmOptions fdm;
};

/// log(e_coarse/e_fine) / log(h_coarse/h_fine); empty when an error is not
/// positive.
std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine);

/// Runs the method on every level and estimates orders between neighbours.
/// Levels are sorted coarse to fine, so the input order does not matter.
/// Throws DomainError without an exact solution, with fewer than two levels
/// or with a repeated level.
ConvergenceResult convergence_study(const problem::ProblemData& p, StudyMethod method, std::vector<StudyLevel> levels,
                                    const StudyOptions& options = {});

}  // namespace invheat::analysis
