#pragma once

#include <span>
#include <vector>

#include "invheat/fdm/grid.hpp"
#include "invheat/numerics/bordered.hpp"

namespace invheat::fdm {

/// One Crank–Nicolson step for the unknowns u_1..u_M, with u_0 = u_M and
/// u_{M+1} = u_{M-1} eliminated. With R = 2h²/(τ(a_old + a_new)):
///
///     A: main −2(1+R), off-diagonals 1, A(1,M) = 1, A(M,M−1) = 2
///     b_1 = 2(1−R)u_1 − u_2 − u_M − Rτ(F_1' + F_1)
///     b_i = −u_{i−1} + 2(1−R)u_i − u_{i+1} − Rτ(F_i' + F_i)
///     b_M = −2u_{M−1} + 2(1−R)u_M − Rτ(F_M' + F_M)
///
/// where primes mark the new level.
struct StepSystem {
    numerics::BorderedTridiagonalMatrix matrix;
    std::vector<double> rhs;
    double r = 0.0;
};

/// `u_old`, `f_old` and `f_new` hold values at x_1..x_M. Throws DomainError
/// unless a_old + a_new > 0.
StepSystem assemble_step(std::span<const double> u_old, double a_old, double a_new, std::span<const double> f_old,
                         std::span<const double> f_new, const FdmGrid& grid);

/// Approximation of h·u_x(0,t) from the values at x_0, x_1, x_2.
enum class GradientRule {
    forward,       ///< u_1 − u_0
    second_order,  ///< (−3u_0 + 4u_1 − u_2)/2
};

double boundary_difference(GradientRule rule, double u0, double u1, double u2);

/// Discrete form of a = (−E′ + ∫F dx)/u_x(0,t) with a forward difference:
///
///     a = (−Et + Fin) h / (u_1 − u_0)
///
/// Throws FlatGradientError when |u_1 − u_0| <= guard.
double estimate_a(double et, double fin, double u1, double u0, double h, double guard = 1e-10);

/// Same quotient for any precomputed boundary difference.
double estimate_a_from_difference(double et, double fin, double difference, double h, double guard,
                                  std::size_t level = 0, std::size_t iteration = 0);

}  // namespace invheat::fdm
