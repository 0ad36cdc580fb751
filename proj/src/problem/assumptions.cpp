#include "invheat/problem/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "invheat/errors.hpp"
#include "invheat/numerics/interpolate.hpp"
#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/operator_p.hpp"

namespace invheat::problem {

namespace {

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

// Tracks the largest residual among several equalities.
struct Worst {
    double value = 0.0;
    double location = 0.0;
    std::string what;

    void offer(double residual, double at, const std::string& label) {
        if (std::abs(residual) > value) {
            value = std::abs(residual);
            location = at;
            what = label;
        }
    }
};

ClauseResult compat_result(const std::string& name, const Worst& w, double tol) {
    ClauseResult r{name, w.value <= tol ? ClauseStatus::pass : ClauseStatus::fail, w.value, w.location, ""};
    r.detail = r.ok() ? fmt("max residual %.3g", w.value)
                      : w.what + fmt(" off by %.6g at %.6g", w.value, w.location);
    return r;
}

}  // namespace

std::string_view to_string(ClauseStatus s) {
    switch (s) {
        case ClauseStatus::pass: return "pass";
        case ClauseStatus::fail: return "fail";
        case ClauseStatus::checked_to_truncation: return "checked-to-truncation";
    }
    return "?";
}

bool AssumptionReport::all_pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.ok(); });
}

const ClauseResult& AssumptionReport::clause(std::string_view name) const {
    for (const auto& c : clauses) {
        if (c.clause == name) return c;
    }
    throw DomainError("no assumption clause named '" + std::string(name) + "'");
}

std::string AssumptionReport::to_text() const {
    std::string out;
    for (const auto& c : clauses) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-6s %-22s ", c.clause.c_str(), std::string(to_string(c.status)).c_str());
        out += buf + c.detail + "\n";
    }
    out += all_pass() ? "all assumptions hold\n" : "assumptions violated\n";
    return out;
}

AssumptionReport validate_assumptions(const ProblemData& p, int k_max, const numerics::QuadratureConfig& quad,
                                      const ValidationOptions& options) {
    if (k_max < 1) throw DomainError("k_max must be at least 1");
    if (options.time_samples < 3 || options.energy_samples < 2) throw DomainError("too few validation samples");
    const double horizon = p.horizon;
    AssumptionReport report;

    {
        const auto ts = numerics::uniform_grid(0.0, horizon, options.energy_samples - 1);
        double worst = -std::numeric_limits<double>::infinity();
        double at = 0.0;
        for (double t : ts) {
            const double d = p.energy.derivative(t);
            if (d > worst) {
                worst = d;
                at = t;
            }
        }
        ClauseResult r{"A1", worst < 0.0 ? ClauseStatus::pass : ClauseStatus::fail, worst, at, ""};
        r.detail = fmt(r.ok() ? "max E' = %.6g at t = %.6g" : "E' = %.6g >= 0 at t = %.6g", worst, at);
        report.clauses.push_back(r);
    }

    {
        Worst w;
        w.offer(p.phi(0.0) - p.phi(1.0), 0.0, "phi(0) = phi(1)");
        w.offer(p.phi.derivative(1, 1.0), 1.0, "phi'(1) = 0");
        w.offer(p.phi.derivative(2, 0.0) - p.phi.derivative(2, 1.0), 0.0, "phi''(0) = phi''(1)");
        const double mass = numerics::integrate([&p](double x) { return p.phi(x); }, 0.0, 1.0, quad);
        w.offer(mass - p.energy(0.0), 0.0, "integral of phi = E(0)");
        report.clauses.push_back(compat_result("A2(1)", w, options.compat_tol));
    }

    const spectral::SpectralCoefficients coeffs = spectral::SpectralCoefficients::compute(p, k_max, quad);
    {
        const auto& phi = coeffs.phi();
        double scale = 1.0;
        for (int k = 1; k <= k_max; ++k) scale = std::max(scale, std::abs(phi[static_cast<std::size_t>(2 * k)]));
        double worst = std::numeric_limits<double>::infinity();
        int at = 1;
        for (int k = 1; k <= k_max; ++k) {
            if (phi[static_cast<std::size_t>(2 * k)] < worst) {
                worst = phi[static_cast<std::size_t>(2 * k)];
                at = k;
            }
        }
        const bool ok = worst >= -options.sign_rel_tol * scale;
        ClauseResult r{"A2(2)", ok ? ClauseStatus::checked_to_truncation : ClauseStatus::fail, worst,
                       static_cast<double>(at), ""};
        r.detail = fmt(ok ? "min phi_2k = %.6g (k = %g), k <= k_max" : "phi_2k = %.6g < 0 at k = %g", worst, at);
        report.clauses.push_back(r);
    }

    const auto ts = numerics::uniform_grid(0.0, horizon, options.time_samples - 1);
    {
        Worst w;
        for (double t : ts) {
            w.offer(p.source(0.0, t) - p.source(1.0, t), t, "F(0,t) = F(1,t)");
            w.offer(p.source.x_derivative(1, 1.0, t), t, "F_x(1,t) = 0");
            w.offer(p.source.x_derivative(2, 0.0, t) - p.source.x_derivative(2, 1.0, t), t, "F_xx(0,t) = F_xx(1,t)");
        }
        report.clauses.push_back(compat_result("A3(1)", w, options.compat_tol));
    }

    {
        const auto table = coeffs.source_table(ts);
        double scale = 1.0;
        for (const auto& row : table) {
            for (int k = 0; k <= k_max; ++k) scale = std::max(scale, std::abs(row[static_cast<std::size_t>(2 * k)]));
        }
        double worst = std::numeric_limits<double>::infinity();
        double worst_k = 0.0;
        double worst_t = 0.0;
        std::vector<double> f0(ts.size());
        for (std::size_t j = 0; j < ts.size(); ++j) {
            f0[j] = table[j][0];
            for (int k = 0; k <= k_max; ++k) {
                const double v = table[j][static_cast<std::size_t>(2 * k)];
                if (v < worst) {
                    worst = v;
                    worst_k = k;
                    worst_t = ts[j];
                }
            }
        }
        const bool signs_ok = worst >= -options.sign_rel_tol * scale;

        // Integral of F_0 by the trapezoid rule on the sample grid, corrected
        // to Simpson when the panel count is even.
        const int panels = options.time_samples - 1;
        const auto q = numerics::make_nodes(0.0, horizon, panels % 2 == 0 ? numerics::QuadratureConfig::simpson(panels)
                                                                          : numerics::QuadratureConfig::trapezoid(panels));
        report.margin = (p.energy(horizon) - p.energy(0.0)) + spectral::even_moment_sum(coeffs.phi()) - 2.0 * q.apply(f0);
        const bool margin_ok = report.margin > 0.0;

        ClauseResult r{"A3(2)", ClauseStatus::checked_to_truncation, report.margin, 0.0, ""};
        if (!signs_ok) {
            r.status = ClauseStatus::fail;
            r.witness = worst;
            r.location = worst_k;
            r.detail = fmt("F_2k = %.6g < 0 at k = %g", worst, worst_k) + fmt(", t = %.6g", worst_t);
        } else if (!margin_ok) {
            r.status = ClauseStatus::fail;
            r.detail = fmt("margin %.6g is not positive", report.margin);
        } else {
            r.detail = fmt("min F_2k = %.6g, margin = %.10g", worst, report.margin);
        }
        report.clauses.push_back(r);
    }
    return report;
}

}  // namespace invheat::problem
