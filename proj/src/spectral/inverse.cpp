#include "invheat/spectral/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "invheat/errors.hpp"
#include "invheat/numerics/interpolate.hpp"
#include "invheat/spectral/forward.hpp"
#include "invheat/spectral/modes.hpp"
#include "invheat/spectral/operator_p.hpp"

namespace invheat::spectral {

namespace {

void check_options(const SpectralOptions& o) {
    if (o.truncation < 1) throw DomainError("K must be at least 1");
    if (o.time_cells < 2) throw DomainError("trajectory grid needs at least two cells");
    if (o.output_x_cells < 2) throw DomainError("output grid needs at least two cells");
    if (!(o.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (o.max_iter < 1) throw DomainError("max_iter must be positive");
    if (!(o.damping > 0.0 && o.damping <= 1.0)) throw DomainError("damping must lie in (0,1]");
    o.x_quad.validate();
    o.t_quad.validate();
}

// Σ 8πk (|φ_2k| + ∫|F_2k|) and the level at which it is only projection
// round-off: a few ulps of the largest coefficient, carried through the same
// weighted sum.
struct Excitation {
    double value = 0.0;
    double noise = 0.0;
};

Excitation even_excitation(const SpectralCoefficients& coeffs, const numerics::QuadratureConfig& t_quad) {
    const auto q = numerics::make_nodes(0.0, coeffs.horizon(), t_quad);
    auto abs_max = [](std::vector<double>& v) {
        double m = 0.0;
        for (double& c : v) {
            c = std::abs(c);
            m = std::max(m, c);
        }
        return m;
    };
    std::vector<double> abs_phi(coeffs.phi());
    const double phi_scale = abs_max(abs_phi);
    std::vector<double> slope(q.nodes.size());
    std::vector<double> scale(q.nodes.size());
    for (std::size_t j = 0; j < q.nodes.size(); ++j) {
        std::vector<double> s = coeffs.source(q.nodes[j]);
        scale[j] = abs_max(s);
        slope[j] = even_slope_sum(s);
    }
    const std::vector<double> ones(coeffs.size(), 1.0);
    const double weight = even_slope_sum(ones);
    return {even_slope_sum(abs_phi) + q.apply(slope),
            16.0 * std::numeric_limits<double>::epsilon() * weight * (phi_scale + q.apply(scale))};
}

}  // namespace

SpectralSolution solve_inverse_spectral(const problem::ProblemData& p, const SpectralOptions& options) {
    check_options(options);
    SpectralDiagnostics diag;

    const SpectralCoefficients coeffs = SpectralCoefficients::compute(p, options.truncation, options.x_quad);
    const Excitation excitation = even_excitation(coeffs, options.t_quad);
    if (excitation.value <= std::max(degenerate_threshold, excitation.noise)) {
        throw DegenerateProblemError("no even mode is excited by the data; the diffusivity cannot be identified");
    }
    diag.tail_estimate = coeffs.tail_estimate();

    diag.assumptions = problem::validate_assumptions(p, options.validate_k_max, options.x_quad);
    if (!diag.assumptions->all_pass()) {
        std::string failed;
        for (const auto& c : diag.assumptions->clauses) {
            if (!c.ok()) failed += (failed.empty() ? "" : ", ") + c.clause;
        }
        if (!options.force) throw AssumptionViolation("data violate assumption(s) " + failed, failed);
        diag.warnings.push_back("assumptions " + failed + " violated; continuing because of force");
    }

    diag.bounds = compute_stability_constants(coeffs, p.energy, options.alpha, options.t_quad);
    double guess = 1.0;
    if (diag.bounds.valid()) {
        guess = 0.5 * (diag.bounds.lo + diag.bounds.hi);
    } else if (!options.force) {
        throw AssumptionViolation("stability constants are not all positive", "C0-C3");
    } else {
        diag.warnings.push_back("admissible band undefined; starting from a = 1");
    }
    diag.uniqueness_certified = diag.bounds.uniqueness_certified();
    if (!diag.uniqueness_certified) {
        diag.warnings.push_back("T exceeds the uniqueness horizon T0; the solution is not certified unique");
    }

    const FixedPointOperator op(coeffs, p.energy, numerics::uniform_grid(0.0, p.horizon, options.time_cells));
    std::vector<double> a(op.times().size(), guess);
    double theta = options.damping;
    double previous = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int n = 1; n <= options.max_iter; ++n) {
        const std::vector<double> next = op.evaluate(CoefficientTrajectory(op.times(), a));
        double change = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) change = std::max(change, std::abs(next[j] - a[j]));
        if (!std::isfinite(change)) throw DomainError("fixed-point iterate became non-finite");
        diag.change_history.push_back(change);
        if (options.auto_damp && change > previous) theta = std::max(theta / 2.0, 1.0 / 1024.0);
        previous = change;
        for (std::size_t j = 0; j < a.size(); ++j) a[j] += theta * (next[j] - a[j]);
        diag.iterations = n;
        diag.final_change = change;
        if (change <= options.tol) {
            converged = true;
            break;
        }
    }
    diag.final_damping = theta;
    if (!converged) {
        throw ConvergenceError("fixed-point iteration did not converge in " + std::to_string(options.max_iter) +
                                   " iterations (last change " + std::to_string(diag.final_change) + ")",
                               diag.change_history);
    }

    CoefficientTrajectory traj(op.times(), a);
    const ModeHistory modes = evolve_modes(traj, coeffs, op.source_table());
    const auto x = numerics::uniform_grid(0.0, 1.0, options.output_x_cells);
    TemperatureField u = synthesize(modes, x, traj.times());
    return {std::move(traj), std::move(u), std::move(diag)};
}

SpectralSolution solve_inverse_spectral(const problem::ProblemData& p, int truncation,
                                        const numerics::QuadratureConfig& quad, double tol, int max_iter) {
    SpectralOptions o;
    o.truncation = truncation;
    o.x_quad = quad;
    o.tol = tol;
    o.max_iter = max_iter;
    return solve_inverse_spectral(p, o);
}

}  // namespace invheat::spectral
