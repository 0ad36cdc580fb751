#include "invheat/numerics/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "invheat/errors.hpp"

namespace invheat::numerics {

double interpolate(std::span<const double> abscissae, std::span<const double> values, double at) {
    if (abscissae.empty() || abscissae.size() != values.size()) {
        throw DomainError("interpolation needs matching, non-empty sample arrays");
    }
    const double lo = abscissae.front();
    const double hi = abscissae.back();
    const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
    if (!(at >= lo - slack && at <= hi + slack)) {
        throw DomainError("interpolation point " + std::to_string(at) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    if (abscissae.size() == 1) return values.front();
    at = std::clamp(at, lo, hi);

    auto it = std::upper_bound(abscissae.begin(), abscissae.end(), at);
    if (it == abscissae.end()) return values.back();
    const auto j = static_cast<std::size_t>(it - abscissae.begin()) - 1;
    const double t0 = abscissae[j];
    const double t1 = abscissae[j + 1];
    if (at == t0) return values[j];
    const double w = (at - t0) / (t1 - t0);
    return values[j] + w * (values[j + 1] - values[j]);
}

std::vector<double> uniform_grid(double lo, double hi, int cells) {
    if (cells < 1) throw DomainError("a grid needs at least one cell");
    std::vector<double> g(static_cast<std::size_t>(cells) + 1);
    const double step = (hi - lo) / cells;
    for (int i = 0; i <= cells; ++i) g[static_cast<std::size_t>(i)] = lo + i * step;
    g.back() = hi;
    return g;
}

}  // namespace invheat::numerics
