#include "invheat/spectral/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "invheat/errors.hpp"
#include "invheat/spectral/operator_p.hpp"

namespace invheat::spectral {

namespace {

double even_cubic_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 2; i < v.size(); i += 2) {
        const double w = 2.0 * std::numbers::pi * static_cast<double>(i / 2);
        s += 4.0 * w * w * w * v[i];
    }
    return s;
}

}  // namespace

bool StabilityBounds::valid() const { return c[0] > 0.0 && c[1] > 0.0 && c[2] > 0.0 && c[3] > 0.0; }

std::string StabilityBounds::to_text() const {
    std::string out;
    char buf[96];
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::snprintf(buf, sizeof buf, "C%zu = %.10g\n", i, c[i]);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "band = [%.10g, %.10g]\n", lo, hi);
    out += buf;
    std::snprintf(buf, sizeof buf, "alpha = %.3g, T0 = %.6g, T = %.6g (%s)\n", alpha, t0, horizon,
                  uniqueness_certified() ? "uniqueness certified" : "uniqueness not certified");
    out += buf;
    return out;
}

StabilityBounds compute_stability_constants(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                                            double alpha, const numerics::QuadratureConfig& t_quad) {
    t_quad.validate();
    const double horizon = coeffs.horizon();
    const numerics::QuadratureNodes q = numerics::make_nodes(0.0, horizon, t_quad);
    const std::size_t n = q.nodes.size();

    std::vector<double> f0(n), g(n), eprime(n), cubic(n), slope(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> s = coeffs.source(q.nodes[j]);
        f0[j] = s[0];
        g[j] = even_moment_sum(s);
        cubic[j] = even_cubic_sum(s);
        slope[j] = even_slope_sum(s);
        eprime[j] = energy.derivative(q.nodes[j]);
    }
    const auto [f0_min, f0_max] = std::minmax_element(f0.begin(), f0.end());
    const auto [g_min, g_max] = std::minmax_element(g.begin(), g.end());
    const auto [e_min, e_max] = std::minmax_element(eprime.begin(), eprime.end());

    StabilityBounds b;
    b.alpha = alpha;
    b.horizon = horizon;
    b.c[0] = 2.0 * *f0_min + *g_min - *e_max;
    b.c[1] = 2.0 * *f0_max + *g_max - *e_min;
    b.c[2] = (energy(horizon) - energy(0.0)) + even_moment_sum(coeffs.phi()) - 2.0 * q.apply(f0);
    b.c[3] = even_slope_sum(coeffs.phi()) + q.apply(slope);
    b.c[4] = even_cubic_sum(coeffs.phi());
    b.c[5] = q.apply(cubic);
    b.c[6] = *std::max_element(slope.begin(), slope.end());

    const double nan = std::numeric_limits<double>::quiet_NaN();
    b.lo = b.c[3] > 0.0 ? b.c[0] / b.c[3] : nan;
    b.hi = b.c[2] > 0.0 ? b.c[1] / b.c[2] : nan;
    const double growth = b.c[1] * (b.c[4] + b.c[5]);
    b.t0 = growth > 0.0 ? std::min(horizon, alpha * b.c[2] * b.c[2] / growth) : horizon;
    return b;
}

StabilityBounds stability_bounds(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                                 double alpha, const numerics::QuadratureConfig& t_quad) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0,1)");
    StabilityBounds b = compute_stability_constants(coeffs, energy, alpha, t_quad);
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(b.c[i] > 0.0)) {
            const std::string name = "C" + std::to_string(i);
            throw AssumptionViolation(name + " = " + std::to_string(b.c[i]) + " is not positive", name);
        }
    }
    return b;
}

}  // namespace invheat::spectral
