#include "invheat/spectral/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "invheat/errors.hpp"
#include "invheat/spectral/basis.hpp"

namespace invheat::spectral {

namespace {

constexpr double merge_slack = 1e-12;

void check_x(std::span<const double> x_grid) {
    for (double x : x_grid) {
        if (!(x >= 0.0 && x <= 1.0)) throw DomainError("x-grid point " + std::to_string(x) + " outside [0,1]");
    }
}

std::size_t find_node(const std::vector<double>& nodes, double t) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), t - merge_slack * std::max(1.0, nodes.back()));
    if (it == nodes.end() || std::abs(*it - t) > merge_slack * std::max(1.0, nodes.back())) {
        throw DomainError("output time " + std::to_string(t) + " is not a node of the mode history");
    }
    return static_cast<std::size_t>(it - nodes.begin());
}

}  // namespace

double evaluate_series(std::span<const double> amplitudes, double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        if (amplitudes[k] != 0.0) s += amplitudes[k] * eigen_x(static_cast<int>(k), x);
    }
    return s;
}

TemperatureField synthesize(const ModeHistory& modes, std::span<const double> x_grid,
                            std::span<const double> t_grid) {
    check_x(x_grid);
    const std::size_t nk = modes.amplitudes.empty() ? 0 : modes.amplitudes[0].size();
    std::vector<double> basis(nk * x_grid.size());
    for (std::size_t k = 0; k < nk; ++k) {
        for (std::size_t i = 0; i < x_grid.size(); ++i) basis[k * x_grid.size() + i] = eigen_x(static_cast<int>(k), x_grid[i]);
    }

    TemperatureField u;
    u.x.assign(x_grid.begin(), x_grid.end());
    u.t.assign(t_grid.begin(), t_grid.end());
    u.provenance = Provenance::spectral;
    u.values.reserve(t_grid.size());
    for (double t : t_grid) {
        const auto& amp = modes.amplitudes[find_node(modes.times, t)];
        std::vector<double> row(x_grid.size(), 0.0);
        for (std::size_t k = 0; k < nk; ++k) {
            if (amp[k] == 0.0) continue;
            const double* b = basis.data() + k * x_grid.size();
            for (std::size_t i = 0; i < x_grid.size(); ++i) row[i] += amp[k] * b[i];
        }
        u.values.push_back(std::move(row));
    }
    u.validate();
    return u;
}

TemperatureField forward_solve(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                               std::span<const double> x_grid, std::span<const double> t_grid) {
    const double lo = a.times().front();
    const double hi = a.times().back();
    const double slack = merge_slack * std::max(1.0, hi);
    for (double t : t_grid) {
        if (!(t >= lo - slack && t <= hi + slack)) {
            throw DomainError("t-grid point " + std::to_string(t) + " outside the trajectory range");
        }
    }

    std::vector<double> merged(a.times());
    merged.insert(merged.end(), t_grid.begin(), t_grid.end());
    std::sort(merged.begin(), merged.end());
    std::vector<double> unique;
    for (double t : merged) {
        t = std::clamp(t, lo, hi);
        if (unique.empty() || t - unique.back() > slack) unique.push_back(t);
    }

    const CoefficientTrajectory fine = a.resampled(unique);
    const ModeHistory modes = evolve_modes(fine, coeffs, coeffs.source_table(fine.times()));
    return synthesize(modes, x_grid, t_grid);
}

}  // namespace invheat::spectral
