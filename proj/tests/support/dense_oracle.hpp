#pragma once

#include <random>
#include <vector>

#include "invheat/numerics/bordered.hpp"

namespace invheat::testing {

/// Textbook Gaussian elimination with partial pivoting on a dense row-major
/// n x n matrix. Independent of the banded solver under test.
std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b);

/// Random instance of the bordered pattern with |main| > sum of the row's
/// off-diagonal magnitudes.
numerics::BorderedTridiagonalMatrix random_dominant(std::size_t m, std::mt19937_64& rng);

}  // namespace invheat::testing
