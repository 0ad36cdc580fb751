#pragma once

#include <vector>

#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::spectral {

/// Mode amplitudes u_k(t_j) for the expansion u = Σ u_k X_k. Row j holds
/// indices 0..2K at times[j].
struct ModeHistory {
    std::vector<double> times;
    std::vector<std::vector<double>> amplitudes;
};

/// Integrates the mode system, with λ_k = (2πk)²,
///
///     u_0'      = F_0
///     u_2k'     + λ_k a u_2k                  = F_2k
///     u_{2k-1}' + λ_k a u_{2k-1} + 4πk a u_2k = F_{2k-1}
///
/// from u_k(0) = φ_k over the nodes of `a`. On each cell a is replaced by its
/// mean (so ∫a is exact for the linear interpolant), the sources are taken
/// linear, and the exponential kernels are integrated in closed form. This
/// stays accurate when λ_k a Δt is large.
///
/// `source` must hold the source coefficients at a.times(). With
/// `even_only`, odd amplitudes are left at zero.
ModeHistory evolve_modes(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                         const std::vector<std::vector<double>>& source, bool even_only = false);

/// ∫_0^1 s^n e^{-z s} ds for n = 0, 1, 2 and z >= 0.
double kernel_moment(int n, double z);

}  // namespace invheat::spectral
