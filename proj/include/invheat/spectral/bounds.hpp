#pragma once

#include <array>
#include <string>

#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/fields.hpp"
#include "invheat/spectral/coefficients.hpp"

namespace invheat::spectral {

/// Constants controlling the admissible diffusivity band and the horizon on
/// which the fixed point is known to be unique. With g(t) = Σ (2/πk) F_2k:
///
///     c[0] = 2 min F_0 + min g − max E′
///     c[1] = 2 max F_0 + max g − min E′
///     c[2] = ∫E′ + Σ (2/πk) φ_2k − 2∫F_0
///     c[3] = Σ 8πk (φ_2k + ∫F_2k)
///     c[4] = Σ 4(2πk)³ φ_2k
///     c[5] = ∫ Σ 4(2πk)³ F_2k
///     c[6] = max Σ 8πk F_2k
///
/// Extrema and integrals run over the nodes of the t-quadrature on [0,T].
struct StabilityBounds {
    std::array<double, 7> c{};
    double lo = 0.0;  ///< c[0] / c[3]
    double hi = 0.0;  ///< c[1] / c[2]
    double alpha = 0.5;
    double t0 = 0.0;  ///< min(T, α c[2]² / (c[1] (c[4] + c[5])))
    double horizon = 0.0;

    /// c[0..3] all positive, so the band is meaningful.
    bool valid() const;
    bool uniqueness_certified() const { return horizon <= t0; }
    std::string to_text() const;
};

/// Computes every constant without judging them.
StabilityBounds compute_stability_constants(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                                            double alpha = 0.5,
                                            const numerics::QuadratureConfig& t_quad =
                                                numerics::QuadratureConfig::simpson(numerics::default_t_panels));

/// As above, but throws AssumptionViolation naming the first of c[0..3]
/// that is not positive, and DomainError unless 0 < alpha < 1.
StabilityBounds stability_bounds(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                                 double alpha = 0.5,
                                 const numerics::QuadratureConfig& t_quad =
                                     numerics::QuadratureConfig::simpson(numerics::default_t_panels));

}  // namespace invheat::spectral
