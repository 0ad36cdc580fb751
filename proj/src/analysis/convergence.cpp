#include "invheat/analysis/convergence.hpp"

#include <algorithm>
#include <cmath>

#include "invheat/errors.hpp"

namespace invheat::analysis {

namespace {

double field_error(const spectral::TemperatureField& u, const problem::SourceField& exact) {
    double e = 0.0;
    for (std::size_t j = 0; j < u.t.size(); ++j) {
        for (std::size_t i = 0; i < u.x.size(); ++i) e = std::max(e, std::abs(u.values[j][i] - exact(u.x[i], u.t[j])));
    }
    return e;
}

double trajectory_error(const std::vector<double>& t, const std::vector<double>& a, const problem::TimeSignal& exact) {
    double e = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) e = std::max(e, std::abs(a[j] - exact(t[j])));
    return e;
}

LevelError run_level(const problem::ProblemData& p, StudyMethod method, const StudyLevel& level,
                     const StudyOptions& options) {
    LevelError r;
    r.level = level;
    r.h = 1.0 / level.resolution;
    switch (method) {
        case StudyMethod::fdm_forward: {
            const fdm::FdmGrid grid(level.resolution, level.steps, p.horizon);
            std::vector<double> t(static_cast<std::size_t>(grid.n()) + 1);
            for (int j = 0; j <= grid.n(); ++j) t[static_cast<std::size_t>(j)] = grid.t(j);
            const auto a = spectral::CoefficientTrajectory::sample([&p](double s) { return (*p.exact_a)(s); }, t);
            r.u_error = field_error(fdm::run_forward_fdm(p, a, grid), *p.exact_u);
            break;
        }
        case StudyMethod::fdm_inverse: {
            const fdm::FdmGrid grid(level.resolution, level.steps, p.horizon);
            const fdm::DiscreteSolution s = fdm::run_inverse_fdm(p, grid, options.fdm);
            r.a_error = trajectory_error(s.times(), s.a, *p.exact_a);
            r.u_error = field_error(s.field(), *p.exact_u);
            break;
        }
        case StudyMethod::spectral: {
            spectral::SpectralOptions o = options.spectral;
            o.truncation = level.resolution;
            const spectral::SpectralSolution s = spectral::solve_inverse_spectral(p, o);
            r.a_error = trajectory_error(s.a.times(), s.a.values(), *p.exact_a);
            r.u_error = field_error(s.u, *p.exact_u);
            break;
        }
    }
    return r;
}

}  // namespace

std::string_view to_string(StudyMethod m) {
    switch (m) {
        case StudyMethod::fdm_forward: return "fdm-forward";
        case StudyMethod::fdm_inverse: return "fdm-inverse";
        case StudyMethod::spectral: return "spectral";
    }
    return "?";
}

std::optional<StudyMethod> parse_study_method(std::string_view text) {
    for (StudyMethod m : {StudyMethod::fdm_forward, StudyMethod::fdm_inverse, StudyMethod::spectral}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

std::optional<double> observed_order(double e_coarse, double e_fine, double h_coarse, double h_fine) {
    if (!(e_coarse > 0.0 && e_fine > 0.0) || h_coarse == h_fine) return std::nullopt;
    return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

ConvergenceResult convergence_study(const problem::ProblemData& p, StudyMethod method, std::vector<StudyLevel> levels,
                                    const StudyOptions& options) {
    if (!p.has_exact()) throw DomainError("exact solution required for a convergence study");
    if (levels.size() < 2) throw DomainError("a convergence study needs at least two levels");
    for (const auto& l : levels) {
        if (l.resolution < 1 || (method != StudyMethod::spectral && l.steps < 1)) {
            throw DomainError("study levels must be positive");
        }
    }
    std::sort(levels.begin(), levels.end(), [](const StudyLevel& a, const StudyLevel& b) {
        return a.resolution != b.resolution ? a.resolution < b.resolution : a.steps < b.steps;
    });
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].resolution == levels[i - 1].resolution) {
            throw DomainError("identical grids in a convergence study; the order is undefined");
        }
    }

    ConvergenceResult out;
    out.method = method;
    for (const auto& l : levels) out.levels.push_back(run_level(p, method, l, options));
    out.a_order.emplace_back();
    out.u_order.emplace_back();
    for (std::size_t i = 1; i < out.levels.size(); ++i) {
        const auto& c = out.levels[i - 1];
        const auto& f = out.levels[i];
        out.u_order.push_back(observed_order(c.u_error, f.u_error, c.h, f.h));
        if (c.a_error && f.a_error) {
            out.a_order.push_back(observed_order(*c.a_error, *f.a_error, c.h, f.h));
        } else {
            out.a_order.emplace_back();
        }
    }
    return out;
}

}  // namespace invheat::analysis
