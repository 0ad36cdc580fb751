#include "invheat/spectral/modes.hpp"

#include <cmath>
#include <numbers>

#include "invheat/errors.hpp"

namespace invheat::spectral {

double kernel_moment(int n, double z) {
    if (z < 0.1) {
        // Σ_m (-z)^m / (m! (n+m+1)); the closed forms cancel badly here.
        double term = 1.0;
        double s = 0.0;
        for (int m = 0; m < 16; ++m) {
            s += term / (n + m + 1);
            term *= -z / (m + 1);
        }
        return s;
    }
    const double e = std::exp(-z);
    switch (n) {
        case 0: return (1.0 - e) / z;
        case 1: return (1.0 - e * (1.0 + z)) / (z * z);
        case 2: return (2.0 - e * (z * z + 2.0 * z + 2.0)) / (z * z * z);
        default: throw DomainError("kernel moment order must be 0, 1 or 2");
    }
}

ModeHistory evolve_modes(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                         const std::vector<std::vector<double>>& source, bool even_only) {
    const auto& t = a.times();
    const auto& av = a.values();
    const std::size_t nt = t.size();
    const std::size_t modes = coeffs.size();
    const int kmax = coeffs.truncation();
    if (source.size() != nt) throw DomainError("source table does not match the trajectory grid");

    ModeHistory h;
    h.times = t;
    h.amplitudes.assign(nt, std::vector<double>(modes, 0.0));
    auto& first = h.amplitudes[0];
    for (std::size_t k = 0; k < modes; ++k) {
        if (!even_only || k % 2 == 0) first[k] = coeffs.phi()[k];
    }

    for (std::size_t j = 0; j + 1 < nt; ++j) {
        const double dt = t[j + 1] - t[j];
        const double da = 0.5 * dt * (av[j] + av[j + 1]);
        const auto& s0 = source[j];
        const auto& s1 = source[j + 1];
        const auto& cur = h.amplitudes[j];
        auto& next = h.amplitudes[j + 1];

        next[0] = cur[0] + 0.5 * dt * (s0[0] + s1[0]);
        for (int k = 1; k <= kmax; ++k) {
            const std::size_t ie = static_cast<std::size_t>(2 * k);
            const double lambda = 4.0 * std::numbers::pi * std::numbers::pi * k * k;
            const double z = lambda * da;
            const double decay = std::exp(-z);
            const double p0 = kernel_moment(0, z);
            const double p1 = kernel_moment(1, z);
            const double g0 = s0[ie];
            const double g1 = s1[ie];
            next[ie] = decay * cur[ie] + dt * (g1 * p0 + (g0 - g1) * p1);
            if (even_only) continue;

            const std::size_t io = ie - 1;
            const double c = 4.0 * std::numbers::pi * k;
            const double p2 = kernel_moment(2, z);
            const double h0 = s0[io];
            const double h1 = s1[io];
            next[io] = decay * (cur[io] - c * da * cur[ie]) + dt * (h1 * p0 + (h0 - h1) * p1) -
                       c * da * dt * (g1 * p1 + (g0 - g1) * p2);
        }
    }
    return h;
}

}  // namespace invheat::spectral
