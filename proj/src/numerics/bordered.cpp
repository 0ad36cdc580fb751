#include "invheat/numerics/bordered.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "invheat/errors.hpp"

namespace invheat::numerics {

BorderedTridiagonalMatrix::BorderedTridiagonalMatrix(std::size_t dimension)
    : main(dimension, 0.0),
      lower(dimension > 0 ? dimension - 1 : 0, 0.0),
      upper(dimension > 0 ? dimension - 1 : 0, 0.0) {}

void BorderedTridiagonalMatrix::validate() const {
    const std::size_t n = main.size();
    if (n < 3) {
        throw DomainError("bordered matrix needs dimension >= 3, got " + std::to_string(n));
    }
    if (lower.size() != n - 1 || upper.size() != n - 1) {
        throw DomainError("bordered matrix diagonal sizes do not match its dimension");
    }
}

double BorderedTridiagonalMatrix::at(std::size_t row, std::size_t col) const {
    const std::size_t n = dimension();
    if (row == col) return main[row];
    if (col == row + 1) return upper[row];
    if (row == col + 1) return lower[col];
    if (row == 0 && col == n - 1) return top_right;
    return 0.0;
}

std::vector<double> BorderedTridiagonalMatrix::multiply(std::span<const double> x) const {
    const std::size_t n = dimension();
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = main[i] * x[i];
        if (i > 0) s += lower[i - 1] * x[i - 1];
        if (i + 1 < n) s += upper[i] * x[i + 1];
        y[i] = s;
    }
    y[0] += top_right * x[n - 1];
    return y;
}

std::vector<double> BorderedTridiagonalMatrix::to_dense() const {
    const std::size_t n = dimension();
    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = at(i, j);
    }
    return d;
}

namespace {

// Active row during elimination of column k: entries at columns k, k+1, k+2
// and the last column, plus the right-hand side.
struct ActiveRow {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double last = 0.0;
    double rhs = 0.0;
};

double max_abs_entry(const BorderedTridiagonalMatrix& a) {
    double m = std::abs(a.top_right);
    for (double v : a.main) m = std::max(m, std::abs(v));
    for (double v : a.lower) m = std::max(m, std::abs(v));
    for (double v : a.upper) m = std::max(m, std::abs(v));
    return m;
}

[[noreturn]] void singular(std::size_t k) {
    throw SingularMatrixError("singular bordered system: vanishing pivot at index " + std::to_string(k),
                              k);
}

}  // namespace

std::vector<double> solve_bordered(const BorderedTridiagonalMatrix& a, std::span<const double> b) {
    a.validate();
    const std::size_t n = a.dimension();
    if (b.size() != n) {
        throw DomainError("right-hand side length " + std::to_string(b.size()) +
                          " does not match dimension " + std::to_string(n));
    }
    const double threshold = 1e-14 * max_abs_entry(a);
    if (threshold == 0.0) singular(0);

    std::vector<ActiveRow> factored;
    factored.reserve(n);

    ActiveRow cur{a.main[0], a.upper[0], 0.0, a.top_right, b[0]};
    for (std::size_t k = 0; k + 4 <= n; ++k) {
        ActiveRow next{a.lower[k], a.main[k + 1], a.upper[k + 1], 0.0, b[k + 1]};
        if (std::abs(next.c0) > std::abs(cur.c0)) std::swap(cur, next);
        if (std::abs(cur.c0) <= threshold) singular(k);
        const double f = next.c0 / cur.c0;
        factored.push_back(cur);
        cur = ActiveRow{next.c1 - f * cur.c1, next.c2 - f * cur.c2, 0.0, next.last - f * cur.last,
                        next.rhs - f * cur.rhs};
    }

    // Trailing block on columns n-3, n-2, n-1.
    std::array<std::array<double, 4>, 3> blk{{
        {cur.c0, cur.c1, cur.last, cur.rhs},
        {a.lower[n - 3], a.main[n - 2], a.upper[n - 2], b[n - 2]},
        {0.0, a.lower[n - 2], a.main[n - 1], b[n - 1]},
    }};
    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < 3; ++r) {
            if (std::abs(blk[r][c]) > std::abs(blk[p][c])) p = r;
        }
        if (std::abs(blk[p][c]) <= threshold) singular(n - 3 + c);
        std::swap(blk[c], blk[p]);
        for (std::size_t r = c + 1; r < 3; ++r) {
            const double f = blk[r][c] / blk[c][c];
            for (std::size_t j = c; j < 4; ++j) blk[r][j] -= f * blk[c][j];
        }
    }

    std::vector<double> x(n, 0.0);
    for (std::size_t c = 3; c-- > 0;) {
        double s = blk[c][3];
        for (std::size_t j = c + 1; j < 3; ++j) s -= blk[c][j] * x[n - 3 + j];
        x[n - 3 + c] = s / blk[c][c];
    }
    for (std::size_t k = factored.size(); k-- > 0;) {
        const ActiveRow& r = factored[k];
        x[k] = (r.rhs - r.c1 * x[k + 1] - r.c2 * x[k + 2] - r.last * x[n - 1]) / r.c0;
    }
    return x;
}

double residual_inf(const BorderedTridiagonalMatrix& a, std::span<const double> x,
                    std::span<const double> b) {
    const std::vector<double> ax = a.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - b[i]));
    return r;
}

}  // namespace invheat::numerics
