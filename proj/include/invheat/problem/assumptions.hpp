#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/problem.hpp"

namespace invheat::problem {

/// checked_to_truncation: a condition over all k held for every k <= k_max.
enum class ClauseStatus { pass, fail, checked_to_truncation };

std::string_view to_string(ClauseStatus s);

/// One clause of the data assumptions. `witness` is the worst observed value
/// (largest E′, largest compatibility residual, most negative coefficient,
/// or the scalar margin) and `location` is where it occurred (t, x or k).
struct ClauseResult {
    std::string clause;
    ClauseStatus status = ClauseStatus::pass;
    double witness = 0.0;
    double location = 0.0;
    std::string detail;

    bool ok() const { return status != ClauseStatus::fail; }
};

struct AssumptionReport {
    std::vector<ClauseResult> clauses;  ///< A1, A2(1), A2(2), A3(1), A3(2) in this order
    double margin = 0.0;                ///< ∫E′ + Σ (2/πk) φ_2k − 2∫F_0

    bool all_pass() const;
    /// Throws DomainError for an unknown clause name.
    const ClauseResult& clause(std::string_view name) const;
    std::string to_text() const;
};

struct ValidationOptions {
    int energy_samples = 1001;    ///< grid for the sign of E′
    int time_samples = 101;       ///< grid for conditions on F(·,t)
    double compat_tol = 1e-6;     ///< absolute tolerance on compatibility equalities
    double sign_rel_tol = 1e-10;  ///< coefficients above -tol·max(1, max|c|) count as non-negative
};

/// Checks:
///   A1     E′(t) < 0 on [0,T]
///   A2(1)  φ(0) = φ(1), φ′(1) = 0, φ″(0) = φ″(1), ∫φ = E(0)
///   A2(2)  φ_2k >= 0 for 1 <= k <= k_max
///   A3(1)  F(0,t) = F(1,t), F_x(1,t) = 0, F_xx(0,t) = F_xx(1,t)
///   A3(2)  F_2k(t) >= 0 for 0 <= k <= k_max, and the margin above is positive
/// Violations are reported, not thrown; evaluation failures propagate.
AssumptionReport validate_assumptions(const ProblemData& p, int k_max = 64,
                                      const numerics::QuadratureConfig& quad = numerics::QuadratureConfig{},
                                      const ValidationOptions& options = {});

}  // namespace invheat::problem
