#include "invheat/fdm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "invheat/errors.hpp"
#include "invheat/numerics/bordered.hpp"

namespace invheat::fdm {

namespace {

std::vector<double> source_row(const problem::ProblemData& p, const FdmGrid& grid, double t) {
    std::vector<double> f(static_cast<std::size_t>(grid.m()));
    for (int i = 1; i <= grid.m(); ++i) f[static_cast<std::size_t>(i - 1)] = p.source(grid.x(i), t);
    return f;
}

// Solves one step and returns u_0..u_{M+1} with the closures applied.
std::vector<double> step(const std::vector<double>& u_old, double a_old, double a_new, const std::vector<double>& f_old,
                         const std::vector<double>& f_new, const FdmGrid& grid, double& residual) {
    const auto m = static_cast<std::size_t>(grid.m());
    const std::span<const double> interior(u_old.data() + 1, m);
    const StepSystem s = assemble_step(interior, a_old, a_new, f_old, f_new, grid);
    const std::vector<double> x = numerics::solve_bordered(s.matrix, s.rhs);
    double scale = 0.0;
    for (double v : s.rhs) scale = std::max(scale, std::abs(v));
    residual = numerics::residual_inf(s.matrix, x, s.rhs) / std::max(scale, 1e-300);

    std::vector<double> u(m + 2);
    std::copy(x.begin(), x.end(), u.begin() + 1);
    u[0] = u[m];
    u[m + 1] = u[m - 1];
    return u;
}

double predict(const FdmGrid& grid, const std::vector<double>& u, const LevelData& d, GradientRule rule,
               std::size_t level, std::size_t iteration) {
    const double diff = boundary_difference(rule, u[0], u[1], u[2]);
    return estimate_a_from_difference(d.et, d.fin, diff, grid.h(), division_guard(u), level, iteration);
}

double max_change(const std::vector<double>& a, const std::vector<double>& b) {
    double c = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) c = std::max(c, std::abs(a[i] - b[i]));
    return c;
}

// Everything about the step j -> j+1 that does not change between inner
// iterations.
struct StepContext {
    const FdmGrid& grid;
    int level;  // j
    double a_old;
    const std::vector<double>& u_old;
    std::vector<double> f_old;
    std::vector<double> f_new;
    LevelData next;
    double mass_rate = 0.0;  // (E_{j+1} − E_j)/τ − h Σ (F_i^j + F_i^{j+1})/2

    StepContext(const problem::ProblemData& p, const FdmGrid& g, int j, double a, const std::vector<double>& u,
                const LevelData& now, const LevelData& nxt)
        : grid(g), level(j), a_old(a), u_old(u), f_old(source_row(p, g, g.t(j))),
          f_new(source_row(p, g, g.t(j + 1))), next(nxt) {
        double load = 0.0;
        for (std::size_t i = 0; i < f_old.size(); ++i) load += 0.5 * (f_old[i] + f_new[i]);
        mass_rate = (nxt.e - now.e) / g.tau() - g.h() * load;
    }
};

// With the closures, h Σ_{i=1..M} of the second difference is
// (u_{M−1} − u_1)/h, so the discrete mass moves at
// c·(D_j + D_{j+1})/(2h) + h Σ F̄ where c is the step coefficient.
double balance_coefficient(const StepContext& ctx, const std::vector<double>& u_it, std::size_t iteration) {
    const auto m = static_cast<std::size_t>(ctx.grid.m());
    const double flux = (ctx.u_old[m - 1] - ctx.u_old[1]) + (u_it[m - 1] - u_it[1]);
    const double guard = division_guard(u_it);
    if (!(std::abs(flux) > guard)) {
        throw FlatGradientError("boundary flux " + std::to_string(flux) + " is below the guard at level " +
                                    std::to_string(ctx.level + 1),
                                static_cast<std::size_t>(ctx.level + 1), iteration);
    }
    return ctx.mass_rate * 2.0 * ctx.grid.h() / flux;
}

CorrectorResult inner_step(const StepContext& ctx, double a_it, const std::vector<double>& u_it,
                           const FdmOptions& options, std::size_t iteration) {
    const double partner = options.coefficient == CoefficientRule::corrector ? a_it : ctx.a_old;
    CorrectorResult r;
    if (options.a_formula == AFormula::pointwise) {
        r.a = predict(ctx.grid, u_it, ctx.next, options.gradient, static_cast<std::size_t>(ctx.level + 1), iteration);
    } else {
        r.a = 2.0 * balance_coefficient(ctx, u_it, iteration) - partner;
    }
    r.u = step(ctx.u_old, partner, r.a, ctx.f_old, ctx.f_new, ctx.grid, r.solve_residual);
    r.change = std::max(std::abs(r.a - a_it), max_change(r.u, u_it));
    return r;
}

}  // namespace

double division_guard(const std::vector<double>& u) {
    double norm = 0.0;
    for (double v : u) norm = std::max(norm, std::abs(v));
    return 1e-10 * std::max(1.0, norm);
}

std::vector<double> DiscreteSolution::times() const {
    std::vector<double> t(static_cast<std::size_t>(grid.n()) + 1);
    for (int j = 0; j <= grid.n(); ++j) t[static_cast<std::size_t>(j)] = grid.t(j);
    return t;
}

spectral::TemperatureField DiscreteSolution::field() const {
    spectral::TemperatureField f;
    for (int i = 0; i <= grid.m(); ++i) f.x.push_back(grid.x(i));
    f.t = times();
    f.provenance = spectral::Provenance::fdm;
    for (const auto& row : u) f.values.emplace_back(row.begin(), row.end() - 1);
    f.validate();
    return f;
}

LevelData level_data(const problem::ProblemData& p, double t, const numerics::QuadratureConfig& quad) {
    LevelData d;
    d.e = p.energy(t);
    d.et = p.energy.derivative(t);
    d.fin = numerics::integrate([&p, t](double x) { return p.source(x, t); }, 0.0, 1.0, quad);
    return d;
}

CorrectorResult corrector_pass(const problem::ProblemData& p, const FdmGrid& grid, int level, double a_old,
                               const std::vector<double>& u_old, double a_iterate,
                               const std::vector<double>& u_iterate, const FdmOptions& options) {
    const StepContext ctx(p, grid, level, a_old, u_old, level_data(p, grid.t(level), options.fin_quad),
                          level_data(p, grid.t(level + 1), options.fin_quad));
    return inner_step(ctx, a_iterate, u_iterate, options, 0);
}

DiscreteSolution run_inverse_fdm(const problem::ProblemData& p, const FdmGrid& grid, const FdmOptions& options) {
    if (!(options.inner_tol > 0.0)) throw DomainError("inner tolerance must be positive");
    if (options.max_inner < 1) throw DomainError("max_inner must be positive");
    if (std::abs(grid.horizon() - p.horizon) > 1e-12 * p.horizon) {
        throw DomainError("grid horizon differs from the problem's T");
    }
    const int m = grid.m();
    const int n = grid.n();
    DiscreteSolution sol{grid, {}, {}, {}, {}, 0.0, {}, {}};

    std::vector<double> u(static_cast<std::size_t>(m) + 2);
    for (int i = 0; i <= m; ++i) u[static_cast<std::size_t>(i)] = p.phi(grid.x(i));
    u[static_cast<std::size_t>(m) + 1] = u[static_cast<std::size_t>(m) - 1];
    LevelData data = level_data(p, 0.0, options.fin_quad);
    double a = predict(grid, u, data, options.gradient, 0, 0);
    if (!(a > 0.0)) sol.nonpositive_levels.push_back(0);
    sol.a.push_back(a);
    sol.u.push_back(u);
    sol.inner_iterations.push_back(0);
    sol.inner_change.push_back(0.0);

    for (int j = 0; j < n; ++j) {
        const LevelData next = level_data(p, grid.t(j + 1), options.fin_quad);
        const StepContext ctx(p, grid, j, a, u, data, next);
        double a_it = a;
        std::vector<double> u_it = u;
        double change = 0.0;
        int s = 0;
        bool flagged = false;
        while (s < options.max_inner) {
            CorrectorResult r = inner_step(ctx, a_it, u_it, options, static_cast<std::size_t>(s));
            if (!(r.a > 0.0) && !flagged) {
                sol.nonpositive_levels.push_back(static_cast<std::size_t>(j + 1));
                flagged = true;
            }
            sol.max_solve_residual = std::max(sol.max_solve_residual, r.solve_residual);
            change = r.change;
            a_it = r.a;
            u_it = std::move(r.u);
            ++s;
            if (change <= options.inner_tol) break;
        }
        if (change > options.inner_tol) {
            sol.warnings.push_back("inner iteration at level " + std::to_string(j + 1) + " stopped after " +
                                   std::to_string(s) + " steps with change " + std::to_string(change));
        }
        a = a_it;
        u = std::move(u_it);
        data = next;
        sol.a.push_back(a);
        sol.u.push_back(u);
        sol.inner_iterations.push_back(s);
        sol.inner_change.push_back(change);
    }
    return sol;
}

DiscreteSolution run_inverse_fdm(const problem::ProblemData& p, const FdmGrid& grid, double inner_tol, int max_inner) {
    FdmOptions o;
    o.inner_tol = inner_tol;
    o.max_inner = max_inner;
    return run_inverse_fdm(p, grid, o);
}

spectral::TemperatureField run_forward_fdm(const problem::ProblemData& p, const spectral::CoefficientTrajectory& a,
                                           const FdmGrid& grid) {
    const int m = grid.m();
    std::vector<double> u(static_cast<std::size_t>(m) + 2);
    for (int i = 0; i <= m; ++i) u[static_cast<std::size_t>(i)] = p.phi(grid.x(i));
    u[static_cast<std::size_t>(m) + 1] = u[static_cast<std::size_t>(m) - 1];

    spectral::TemperatureField f;
    for (int i = 0; i <= m; ++i) f.x.push_back(grid.x(i));
    f.provenance = spectral::Provenance::fdm;
    f.t.push_back(0.0);
    f.values.emplace_back(u.begin(), u.end() - 1);

    std::vector<double> f_old = source_row(p, grid, 0.0);
    double a_old = a(0.0);
    for (int j = 0; j < grid.n(); ++j) {
        const double t1 = grid.t(j + 1);
        const std::vector<double> f_new = source_row(p, grid, t1);
        const double a_new = a(t1);
        double residual = 0.0;
        u = step(u, a_old, a_new, f_old, f_new, grid, residual);
        f.t.push_back(t1);
        f.values.emplace_back(u.begin(), u.end() - 1);
        f_old = f_new;
        a_old = a_new;
    }
    f.validate();
    return f;
}

}  // namespace invheat::fdm
