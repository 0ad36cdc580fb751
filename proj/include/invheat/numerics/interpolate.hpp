#pragma once

#include <span>
#include <vector>

namespace invheat::numerics {

/// Piecewise-linear interpolant through (abscissae[j], values[j]) evaluated
/// at `at`. Abscissae must be strictly increasing. Exact at nodes.
///
/// Throws DomainError when `at` lies outside [abscissae.front(), abscissae.back()]
/// by more than a few ulps of the range.
double interpolate(std::span<const double> abscissae, std::span<const double> values, double at);

/// cells+1 equispaced points from lo to hi; the last one is exactly hi.
std::vector<double> uniform_grid(double lo, double hi, int cells);

}  // namespace invheat::numerics
