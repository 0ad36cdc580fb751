#include "dense_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace invheat::testing {

std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    if (a.size() != n * n) throw std::invalid_argument("dense_solve: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(a[r * n + k]) > std::abs(a[p * n + k])) p = r;
        }
        if (a[p * n + k] == 0.0) throw std::runtime_error("dense_solve: singular");
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[p * n + c]);
            std::swap(b[k], b[p]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[r * n + k] / a[k * n + k];
            if (f == 0.0) continue;
            for (std::size_t c = k; c < n; ++c) a[r * n + c] -= f * a[k * n + c];
            b[r] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}

numerics::BorderedTridiagonalMatrix random_dominant(std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> extra(0.1, 2.0);
    std::bernoulli_distribution sign(0.5);
    numerics::BorderedTridiagonalMatrix a(m);
    for (auto& v : a.lower) v = off(rng);
    for (auto& v : a.upper) v = off(rng);
    a.top_right = off(rng);
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        if (i > 0) s += std::abs(a.lower[i - 1]);
        if (i + 1 < m) s += std::abs(a.upper[i]);
        if (i == 0) s += std::abs(a.top_right);
        a.main[i] = (s + extra(rng)) * (sign(rng) ? 1.0 : -1.0);
    }
    return a;
}

}  // namespace invheat::testing
