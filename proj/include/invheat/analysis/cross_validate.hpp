#pragma once

#include <optional>
#include <string>

#include "invheat/fdm/solver.hpp"
#include "invheat/problem/problem.hpp"
#include "invheat/spectral/inverse.hpp"

namespace invheat::analysis {

/// Outcome class of one solver run, for comparing how methods fail.
enum class RunOutcome { success, unidentifiable, other_failure };

std::string_view to_string(RunOutcome o);

struct CrossValidation {
    RunOutcome spectral_outcome = RunOutcome::success;
    RunOutcome fdm_outcome = RunOutcome::success;
    std::string spectral_message;
    std::string fdm_message;
    std::optional<double> a_discrepancy;  ///< sup over the FDM levels
    std::optional<double> u_discrepancy;  ///< sup over the FDM nodes x_0..x_M at every level

    bool both_succeeded() const {
        return spectral_outcome == RunOutcome::success && fdm_outcome == RunOutcome::success;
    }
    bool outcomes_agree() const { return spectral_outcome == fdm_outcome; }
};

/// Solves the inverse problem both ways and compares on the FDM grid; the
/// spectral a is interpolated and its u re-synthesized at the FDM nodes.
/// Degenerate-spectrum and flat-gradient failures are classed as
/// "unidentifiable" rather than thrown.
CrossValidation cross_validate(const problem::ProblemData& p, const spectral::SpectralOptions& spectral_options,
                               const fdm::FdmGrid& grid, const fdm::FdmOptions& fdm_options = {});

/// Both forward solvers driven by the exact diffusivity; reports the u
/// discrepancy on the FDM grid. Throws DomainError without exact_a.
CrossValidation cross_validate_forward(const problem::ProblemData& p, int truncation, const fdm::FdmGrid& grid);

}  // namespace invheat::analysis
