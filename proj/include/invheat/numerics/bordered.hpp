#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace invheat::numerics {

/// Tridiagonal matrix with one extra entry in the top-right corner:
///
///     [ d0  u0                 c ]
///     [ l0  d1  u1               ]
///     [     l1  d2  u2           ]
///     [          ...             ]
///     [              l_{M-2} d_{M-1} ]
///
/// This is the shape of the Crank–Nicolson system under the nonlocal
/// closures u_0 = u_M and u_{M+1} = u_{M-1}: the corner carries the
/// periodic coupling, and the last sub-diagonal entry is 2 from the mirror.
struct BorderedTridiagonalMatrix {
    std::vector<double> main;   ///< size M
    std::vector<double> lower;  ///< size M-1, lower[i] = A(i+1, i)
    std::vector<double> upper;  ///< size M-1, upper[i] = A(i, i+1)
    double top_right = 0.0;     ///< A(0, M-1)

    explicit BorderedTridiagonalMatrix(std::size_t dimension = 3);

    std::size_t dimension() const noexcept { return main.size(); }

    /// Throws DomainError unless dimension >= 3 and diagonal sizes agree.
    void validate() const;

    /// Entry (row, col) for any position; zero outside the pattern.
    double at(std::size_t row, std::size_t col) const;

    std::vector<double> multiply(std::span<const double> x) const;

    /// Row-major dense copy (dimension x dimension).
    std::vector<double> to_dense() const;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Only rows k
/// and k+1 compete for pivot k, so fill stays within two super-diagonals plus
/// the last column; the trailing 3x3 block is eliminated densely.
///
/// Throws SingularMatrixError carrying the pivot index when a pivot is below
/// 1e-14 times the largest matrix entry.
std::vector<double> solve_bordered(const BorderedTridiagonalMatrix& a, std::span<const double> b);

/// max_i |(A x - b)_i|
double residual_inf(const BorderedTridiagonalMatrix& a, std::span<const double> x,
                    std::span<const double> b);

}  // namespace invheat::numerics
