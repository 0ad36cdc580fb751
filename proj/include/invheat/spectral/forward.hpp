#pragma once

#include <span>
#include <vector>

#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/modes.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::spectral {

/// Σ_k amplitudes[k] X_k(x).
double evaluate_series(std::span<const double> amplitudes, double x);

/// u(x,t) from the truncated expansion for a known diffusivity. The modes
/// are integrated on the union of a's nodes and `t_grid`, so output times
/// need not be trajectory nodes. Throws DomainError if a grid leaves the
/// domain.
TemperatureField forward_solve(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                               std::span<const double> x_grid, std::span<const double> t_grid);

/// Same, reusing a mode history already integrated on a's nodes; `t_grid`
/// must be a subset of those nodes.
TemperatureField synthesize(const ModeHistory& modes, std::span<const double> x_grid,
                            std::span<const double> t_grid);

}  // namespace invheat::spectral
