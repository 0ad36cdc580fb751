#pragma once

#include <vector>

#include "invheat/problem/fields.hpp"
#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/modes.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::spectral {

/// Denominators below this raise DegenerateProblemError.
inline constexpr double degenerate_threshold = 1e-12;

/// The map whose fixed points are the admissible diffusivities:
///
///     P[a](t) = (2F_0 + Σ (2/πk) F_2k − E′) / Σ 8πk u_2k(t; a)
///
/// where u_2k(·; a) are the even mode amplitudes driven by a. The numerator
/// does not depend on a and is tabulated once for a fixed time grid.
class FixedPointOperator {
public:
    FixedPointOperator(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                       std::vector<double> times);

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& numerator() const noexcept { return numerator_; }
    const std::vector<std::vector<double>>& source_table() const noexcept { return source_; }

    /// Σ 8πk u_2k(t_j) for a sampled on times().
    std::vector<double> denominator(const CoefficientTrajectory& a) const;

    /// Raw quotient at every node, which may be non-positive for data that
    /// violate the assumptions. a is resampled onto times() if needed.
    std::vector<double> evaluate(const CoefficientTrajectory& a) const;

    /// evaluate() wrapped as a trajectory; DomainError if a value is not
    /// positive.
    CoefficientTrajectory apply(const CoefficientTrajectory& a) const;

private:
    const SpectralCoefficients* coeffs_;
    std::vector<double> times_;
    std::vector<std::vector<double>> source_;
    std::vector<double> numerator_;
};

/// One-shot P[a] on a's own grid.
CoefficientTrajectory apply_P(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                              const problem::TimeSignal& energy);

/// Σ (2/πk) v_2k for k = 1..K.
double even_moment_sum(const std::vector<double>& v);

/// Σ 8πk v_2k for k = 1..K.
double even_slope_sum(const std::vector<double>& v);

}  // namespace invheat::spectral
