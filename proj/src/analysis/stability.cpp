#include "invheat/analysis/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "invheat/errors.hpp"
#include "invheat/numerics/interpolate.hpp"

namespace invheat::analysis {

namespace {

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double field_gap(const spectral::TemperatureField& u, const spectral::TemperatureField& v) {
    double m = 0.0;
    for (std::size_t j = 0; j < u.values.size(); ++j) m = std::max(m, max_gap(u.values[j], v.values[j]));
    return m;
}

bool energy_decreasing(const problem::ProblemData& p) {
    for (double t : numerics::uniform_grid(0.0, p.horizon, 1000)) {
        if (!(p.energy.derivative(t) < 0.0)) return false;
    }
    return true;
}

}  // namespace

problem::ProblemData perturb_energy(const problem::ProblemData& p, double delta) {
    problem::ProblemData q = p;
    const problem::TimeSignal base = p.energy;
    const double w = std::numbers::pi / p.horizon;
    q.energy = problem::TimeSignal::from_functions(
        [base, delta, w](double t) { return base(t) + delta * std::sin(w * t); },
        [base, delta, w](double t) { return base.derivative(t) + delta * w * std::cos(w * t); });
    return q;
}

StabilityReport stability_experiment(const problem::ProblemData& p, const std::vector<double>& deltas,
                                     std::uint64_t seed, const spectral::SpectralOptions& options) {
    StabilityReport report;
    report.seed = seed;
    const spectral::SpectralSolution base = spectral::solve_inverse_spectral(p, options);

    for (double delta : deltas) {
        PerturbationResult r;
        r.delta = delta;
        const problem::ProblemData q = perturb_energy(p, delta);
        if (!energy_decreasing(q)) {
            r.feasible = false;
            r.note = "perturbed E' is not negative everywhere";
            report.results.push_back(r);
            continue;
        }
        try {
            const spectral::SpectralSolution s = spectral::solve_inverse_spectral(q, options);
            r.a_deviation = max_gap(s.a.values(), base.a.values());
            r.u_deviation = field_gap(s.u, base.u);
            if (delta != 0.0) {
                r.a_ratio = r.a_deviation / std::abs(delta);
                r.u_ratio = r.u_deviation / std::abs(delta);
            } else if (r.a_deviation != 0.0 || r.u_deviation != 0.0) {
                report.zero_is_exact = false;
            }
        } catch (const Error& e) {
            r.feasible = false;
            r.note = e.what();
        }
        report.results.push_back(r);
    }

    std::vector<const PerturbationResult*> feasible;
    for (const auto& r : report.results) {
        if (r.feasible) feasible.push_back(&r);
    }
    std::sort(feasible.begin(), feasible.end(),
              [](const PerturbationResult* a, const PerturbationResult* b) { return std::abs(a->delta) < std::abs(b->delta); });
    for (std::size_t i = 1; i < feasible.size(); ++i) {
        if (feasible[i]->a_deviation < feasible[i - 1]->a_deviation ||
            feasible[i]->u_deviation < feasible[i - 1]->u_deviation) {
            report.monotone = false;
        }
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    int count = 0;
    for (const auto* r : feasible) {
        if (!r->a_ratio) continue;
        lo = std::min(lo, *r->a_ratio);
        hi = std::max(hi, *r->a_ratio);
        ++count;
    }
    report.ratio_spread = count >= 2 ? (lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity()) : 1.0;
    report.bounded = report.ratio_spread <= 4.0;
    return report;
}

}  // namespace invheat::analysis
