#pragma once

#include <functional>

#include "invheat/numerics/quadrature.hpp"

namespace invheat::spectral {

/// Index convention shared by both families: 0 is the constant/linear member,
/// 2k-1 the cosine-type member and 2k the associated (sine-type) member of
/// wavenumber k >= 1.
inline int wavenumber(int index) { return (index + 1) / 2; }

/// Root functions of the spectral problem with the nonlocal closures
/// X(0) = X(1), X'(1) = 0:
///     X_0 = 2,  X_{2k-1} = 4 cos 2πkx,  X_{2k} = 4(1-x) sin 2πkx.
double eigen_x(int index, double x);

/// Root functions of the adjoint problem:
///     Y_0 = x,  Y_{2k-1} = x cos 2πkx,  Y_{2k} = sin 2πkx.
/// (X_i, Y_j) = δ_ij on [0,1].
double eigen_y(int index, double x);

/// (f, Y_index) on [0,1].
double project(const std::function<double(double)>& f, int index,
               const numerics::QuadratureConfig& quad = numerics::QuadratureConfig{});

}  // namespace invheat::spectral
