#include "invheat/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "invheat/analysis/consistency.hpp"
#include "invheat/analysis/convergence.hpp"
#include "invheat/analysis/csv.hpp"
#include "invheat/analysis/error_table.hpp"
#include "invheat/analysis/stability.hpp"
#include "invheat/errors.hpp"
#include "invheat/fdm/solver.hpp"
#include "invheat/problem/assumptions.hpp"
#include "invheat/problem/problem.hpp"
#include "invheat/spectral/inverse.hpp"

namespace invheat::cli {

namespace {

namespace fs = std::filesystem;
using analysis::format_number;

class UsageError : public Error {
public:
    using Error::Error;
};

// Layer of the second reproduced table.
constexpr int table2_level = 70;

struct Gate {
    std::string name;
    double value;
    double limit;
    bool ok() const { return value <= limit; }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

problem::ProblemData load(const fs::path& path) {
    if (path.empty()) throw UsageError("no problem file given");
    if (!fs::exists(path)) throw UsageError("problem file '" + path.string() + "' does not exist");
    return problem::load_problem(path);
}

void check_common(const RunConfig& cfg) {
    if (cfg.K < 1) throw UsageError("--K must be at least 1");
    if (cfg.M < 4) throw UsageError("grid too coarse: --M must be at least 4, got " + std::to_string(cfg.M));
    if (cfg.N && *cfg.N < 1) throw UsageError("--N must be at least 1");
    if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be positive");
    if (cfg.max_iter && *cfg.max_iter < 1) throw UsageError("--max-iter must be positive");
}

void prepare_out(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create output directory '" + dir.string() + "'");
}

// N = 4TM gives τ = h/4.
int default_steps(int m, double horizon) { return std::max(1, static_cast<int>(std::lround(4.0 * horizon * m))); }

fdm::FdmOptions fdm_options(const RunConfig& cfg) {
    fdm::FdmOptions o;
    if (cfg.tol) o.inner_tol = *cfg.tol;
    if (cfg.max_iter) o.max_inner = *cfg.max_iter;
    if (cfg.gradient == "forward") {
        o.gradient = fdm::GradientRule::forward;
    } else if (cfg.gradient == "second-order") {
        o.gradient = fdm::GradientRule::second_order;
    } else {
        throw UsageError("unknown --gradient '" + cfg.gradient + "'");
    }
    if (cfg.coefficient == "corrector") {
        o.coefficient = fdm::CoefficientRule::corrector;
    } else if (cfg.coefficient == "level-average") {
        o.coefficient = fdm::CoefficientRule::level_average;
    } else {
        throw UsageError("unknown --coefficient '" + cfg.coefficient + "'");
    }
    if (cfg.a_formula == "pointwise") {
        o.a_formula = fdm::AFormula::pointwise;
    } else if (cfg.a_formula == "balance") {
        o.a_formula = fdm::AFormula::balance;
    } else {
        throw UsageError("unknown --a-formula '" + cfg.a_formula + "'");
    }
    return o;
}

spectral::SpectralOptions spectral_options(const RunConfig& cfg, double default_tol = 1e-6) {
    spectral::SpectralOptions o;
    o.truncation = cfg.K;
    o.tol = cfg.tol.value_or(default_tol);
    if (cfg.max_iter) o.max_iter = *cfg.max_iter;
    o.force = cfg.force;
    return o;
}

fdm::FdmGrid fdm_grid(const RunConfig& cfg, double horizon) {
    return {cfg.M, cfg.N.value_or(default_steps(cfg.M, horizon)), horizon};
}

analysis::ErrorTable a_table(const std::vector<double>& t, const std::vector<double>& a, const problem::TimeSignal& exact) {
    std::vector<std::vector<double>> coords;
    for (double v : t) coords.push_back({v});
    return analysis::error_table({"t"}, coords, a, [&exact](std::span<const double> c) { return exact(c[0]); });
}

analysis::ErrorTable u_table(const spectral::TemperatureField& u, const problem::SourceField& exact,
                             std::optional<std::size_t> only_level = std::nullopt) {
    std::vector<std::vector<double>> coords;
    std::vector<double> approx;
    for (std::size_t j = 0; j < u.t.size(); ++j) {
        if (only_level && j != *only_level) continue;
        for (std::size_t i = 0; i < u.x.size(); ++i) {
            if (only_level) {
                coords.push_back({u.x[i]});
            } else {
                coords.push_back({u.t[j], u.x[i]});
            }
            approx.push_back(u.values[j][i]);
        }
    }
    const double tl = only_level ? u.t[*only_level] : 0.0;
    if (only_level) {
        return analysis::error_table({"x"}, coords, approx, [&exact, tl](std::span<const double> c) { return exact(c[0], tl); });
    }
    return analysis::error_table({"t", "x"}, coords, approx,
                                 [&exact](std::span<const double> c) { return exact(c[1], c[0]); });
}

void write_outputs(const fs::path& dir, const problem::ProblemData& p, const std::vector<double>& t,
                   const std::vector<double>& a, const spectral::TemperatureField& u, const analysis::CsvDocument& diag,
                   std::ostream& out) {
    if (p.exact_a) {
        const auto table = a_table(t, a, *p.exact_a);
        analysis::write_csv(dir / "a.csv", analysis::to_csv(table));
        out << "max |a error| = " << format_number(table.max_error())
            << ", max relative error = " << format_number(table.max_relative().value_or(0.0)) << "\n";
    } else {
        analysis::write_csv(dir / "a.csv", analysis::trajectory_csv(t, a));
    }
    if (p.exact_u) {
        const auto table = u_table(u, *p.exact_u);
        analysis::write_csv(dir / "u.csv", analysis::to_csv(table));
        out << "max |u error| = " << format_number(table.max_error()) << "\n";
    } else {
        analysis::write_csv(dir / "u.csv", analysis::field_csv(u));
    }
    analysis::write_csv(dir / "diagnostics.csv", diag);
}

void add(analysis::CsvDocument& d, const std::string& key, const std::string& value) { d.add({key, value}); }
void add(analysis::CsvDocument& d, const std::string& key, double value) { d.add({key, format_number(value)}); }

int solve_spectral(const RunConfig& cfg, const problem::ProblemData& p, std::ostream& out, std::ostream& err) {
    const spectral::SpectralSolution s = spectral::solve_inverse_spectral(p, spectral_options(cfg));
    const auto& d = s.diagnostics;
    for (const auto& w : d.warnings) err << "warning: " << w << "\n";
    const auto cons = analysis::check_consistency(s.u, p.energy, numerics::QuadratureRule::composite_simpson);

    analysis::CsvDocument diag{{"key", "value"}, {}};
    add(diag, "method", "spectral");
    add(diag, "K", static_cast<double>(cfg.K));
    add(diag, "iterations", static_cast<double>(d.iterations));
    add(diag, "final_change", d.final_change);
    for (std::size_t i = 0; i < d.bounds.c.size(); ++i) add(diag, "C" + std::to_string(i), d.bounds.c[i]);
    add(diag, "band_lo", d.bounds.lo);
    add(diag, "band_hi", d.bounds.hi);
    add(diag, "T0", d.bounds.t0);
    add(diag, "uniqueness_certified", d.uniqueness_certified ? "yes" : "no");
    add(diag, "tail_estimate", d.tail_estimate);
    add(diag, "max_mass_drift", cons.max_drift);
    add(diag, "warnings", static_cast<double>(d.warnings.size()));

    out << "spectral: " << d.iterations << " iterations, final change " << format_number(d.final_change)
        << ", mass drift " << format_number(cons.max_drift) << "\n";
    write_outputs(cfg.out, p, s.a.times(), s.a.values(), s.u, diag, out);
    return exit_ok;
}

int solve_fdm(const RunConfig& cfg, const problem::ProblemData& p, std::ostream& out, std::ostream& err) {
    const fdm::FdmOptions opts = fdm_options(cfg);
    if (!cfg.force) {
        const auto report = problem::validate_assumptions(p);
        if (!report.all_pass()) {
            err << report.to_text();
            throw Error("data violate the assumptions; rerun with --force to proceed");
        }
    }
    const fdm::FdmGrid grid = fdm_grid(cfg, p.horizon);
    const fdm::DiscreteSolution s = fdm::run_inverse_fdm(p, grid, opts);
    for (const auto& w : s.warnings) err << "warning: " << w << "\n";
    const spectral::TemperatureField u = s.field();
    const auto cons = analysis::check_consistency(u, p.energy);

    analysis::CsvDocument diag{{"key", "value"}, {}};
    add(diag, "method", "fdm");
    add(diag, "M", static_cast<double>(grid.m()));
    add(diag, "N", static_cast<double>(grid.n()));
    add(diag, "h", grid.h());
    add(diag, "tau", grid.tau());
    add(diag, "gradient", cfg.gradient);
    add(diag, "coefficient", cfg.coefficient);
    add(diag, "a_formula", cfg.a_formula);
    add(diag, "max_inner_iterations",
        static_cast<double>(*std::max_element(s.inner_iterations.begin(), s.inner_iterations.end())));
    add(diag, "max_inner_change", *std::max_element(s.inner_change.begin(), s.inner_change.end()));
    add(diag, "max_solve_residual", s.max_solve_residual);
    add(diag, "nonpositive_levels", static_cast<double>(s.nonpositive_levels.size()));
    add(diag, "max_mass_drift", cons.max_drift);
    add(diag, "warnings", static_cast<double>(s.warnings.size()));

    out << "fdm: M=" << grid.m() << " N=" << grid.n() << ", mass drift " << format_number(cons.max_drift) << "\n";
    write_outputs(cfg.out, p, s.times(), s.a, u, diag, out);
    return exit_ok;
}

void print_gates(const std::vector<Gate>& gates, std::ostream& out) {
    for (const auto& g : gates) {
        out << (g.ok() ? "PASS " : "FAIL ") << g.name << ": " << fmt("%.6g", g.value) << " (limit "
            << fmt("%.6g", g.limit) << ")\n";
    }
}

}  // namespace

int cmd_validate(const fs::path& problem, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto p = load(problem);
        const auto report = problem::validate_assumptions(p);
        out << report.to_text();
        return report.all_pass() ? exit_ok : exit_failure;
    });
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_common(cfg);
        if (cfg.method != "spectral" && cfg.method != "fdm") throw UsageError("--method must be spectral or fdm");
        if (cfg.method == "fdm") fdm_options(cfg);
        const auto p = load(cfg.problem);
        prepare_out(cfg.out);
        return cfg.method == "spectral" ? solve_spectral(cfg, p, out, err) : solve_fdm(cfg, p, out, err);
    });
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_common(cfg);
        if (cfg.method != "spectral" && cfg.method != "fdm" && cfg.method != "both") {
            throw UsageError("--method must be spectral, fdm or both");
        }
        const fdm::FdmOptions fopts = fdm_options(cfg);
        const auto p = load(cfg.problem.empty() ? problem::bundled_example_path() : cfg.problem);
        if (!p.has_exact()) throw UsageError("reproduction needs exact_a and exact_u in the problem file");
        prepare_out(cfg.out);
        std::vector<Gate> gates;

        if (cfg.method != "spectral") {
            const fdm::FdmGrid grid = fdm_grid(cfg, p.horizon);
            if (grid.n() < table2_level) throw UsageError("N must be at least 70 to report the second table");
            const fdm::DiscreteSolution s = fdm::run_inverse_fdm(p, grid, fopts);
            const spectral::TemperatureField u = s.field();
            const auto t1 = a_table(s.times(), s.a, *p.exact_a);
            const auto t2 = u_table(u, *p.exact_u, table2_level);
            analysis::write_csv(cfg.out / "table1.csv", analysis::to_csv(t1));
            analysis::write_csv(cfg.out / "table2.csv", analysis::to_csv(t2));
            out << "fdm: h=" << format_number(grid.h()) << " tau=" << format_number(grid.tau()) << " gradient="
                << cfg.gradient << " coefficient=" << cfg.coefficient << " a-formula=" << cfg.a_formula << "\n";
            gates.push_back({"fdm max relative error of a", t1.max_relative().value_or(0.0), 0.05});
            gates.push_back({"fdm max |u error| at layer 70", t2.max_error(), 0.03});
        }
        if (cfg.method != "fdm") {
            const spectral::SpectralSolution s = spectral::solve_inverse_spectral(p, spectral_options(cfg));
            for (const auto& w : s.diagnostics.warnings) err << "warning: " << w << "\n";
            const auto ta = a_table(s.a.times(), s.a.values(), *p.exact_a);
            const auto tu = u_table(s.u, *p.exact_u);
            analysis::write_csv(cfg.out / "spectral_a.csv", analysis::to_csv(ta));
            out << "spectral: K=" << cfg.K << ", " << s.diagnostics.iterations << " iterations\n";
            gates.push_back({"spectral max relative error of a", ta.max_relative().value_or(0.0), 2e-3});
            gates.push_back({"spectral max |u error|", tu.max_error(), 1e-4});
        }
        print_gates(gates, out);
        const bool ok = std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.ok(); });
        return ok ? exit_ok : exit_failure;
    });
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_common(cfg);
        const auto method = analysis::parse_study_method(cfg.method);
        if (!method) throw UsageError("--method must be fdm-forward, fdm-inverse or spectral");
        const auto p = load(cfg.problem);
        if (!p.has_exact()) throw UsageError("exact solution required (exact_a and exact_u)");
        std::vector<int> levels = cfg.levels;
        if (levels.empty()) {
            levels = *method == analysis::StudyMethod::spectral ? std::vector<int>{4, 8, 16} : std::vector<int>{50, 100, 200};
        }
        std::vector<analysis::StudyLevel> study;
        for (int l : levels) {
            if (l < 1 || (*method != analysis::StudyMethod::spectral && l < 4)) {
                throw UsageError("invalid level " + std::to_string(l));
            }
            study.push_back({l, default_steps(l, p.horizon)});
        }
        for (std::size_t i = 0; i < study.size(); ++i) {
            for (std::size_t k = i + 1; k < study.size(); ++k) {
                if (study[i].resolution == study[k].resolution) throw UsageError("identical levels; order undefined");
            }
        }
        analysis::StudyOptions opts;
        opts.fdm = fdm_options(cfg);
        opts.spectral = spectral_options(cfg);
        prepare_out(cfg.out);
        const auto r = analysis::convergence_study(p, *method, study, opts);

        analysis::CsvDocument doc{{"level", "steps", "h", "a_error", "u_error", "a_order", "u_order"}, {}};
        auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("undefined"); };
        for (std::size_t i = 0; i < r.levels.size(); ++i) {
            const auto& l = r.levels[i];
            doc.add({std::to_string(l.level.resolution), std::to_string(l.level.steps), format_number(l.h),
                     opt(l.a_error), format_number(l.u_error), opt(r.a_order[i]), opt(r.u_order[i])});
        }
        analysis::write_csv(cfg.out / "convergence.csv", doc);
        out << doc.to_string();
        return exit_ok;
    });
}

int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_common(cfg);
        if (cfg.deltas.empty()) throw UsageError("--deltas must list at least one value");
        const auto p = load(cfg.problem);
        prepare_out(cfg.out);
        const auto r = analysis::stability_experiment(p, cfg.deltas, cfg.seed, spectral_options(cfg, 1e-8));

        analysis::CsvDocument doc{{"delta", "feasible", "a_deviation", "u_deviation", "a_ratio", "u_ratio"}, {}};
        auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string("undefined"); };
        for (const auto& row : r.results) {
            doc.add({format_number(row.delta), row.feasible ? "yes" : "no", format_number(row.a_deviation),
                     format_number(row.u_deviation), opt(row.a_ratio), opt(row.u_ratio)});
            if (!row.note.empty()) err << "delta " << format_number(row.delta) << ": " << row.note << "\n";
        }
        analysis::write_csv(cfg.out / "stability.csv", doc);
        out << doc.to_string();
        out << "seed " << r.seed << "\n";
        out << "ratio spread " << format_number(r.ratio_spread) << (r.bounded ? " (bounded)" : " (unbounded)") << "\n";
        out << "deviations " << (r.monotone ? "monotone" : "not monotone") << " in delta\n";
        out << "zero perturbation " << (r.zero_is_exact ? "reproduces" : "does not reproduce") << " the base solution\n";
        const bool pass = r.bounded && r.zero_is_exact;
        out << "verdict: " << (pass ? "pass" : "fail") << "\n";
        return pass ? exit_ok : exit_failure;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identify a(t) and u(x,t) in u_t = a(t) u_xx + F from the integral of u."};
    app.require_subcommand(1);
    RunConfig cfg;
    int n_steps = 0;
    double tol = 0.0;
    int max_iter = 0;

    auto common = [&](CLI::App* sub, bool file_required) {
        auto* opt = sub->add_option("problem", cfg.problem, file_required ? "problem file" : "problem file (default: bundled example)");
        if (file_required) opt->required();
        sub->add_option("--K", cfg.K, "spectral truncation");
        sub->add_option("--M", cfg.M, "spatial cells");
        sub->add_option("--N", n_steps, "time steps (default gives tau = h/4)");
        sub->add_option("--tol", tol, "Picard tolerance (spectral) or inner tolerance (fdm)");
        sub->add_option("--max-iter", max_iter, "Picard or inner iteration cap");
        sub->add_option("--out", cfg.out, "output directory");
        sub->add_flag("--force", cfg.force, "proceed when the assumptions fail");
        sub->add_option("--seed", cfg.seed, "seed recorded with experiment outputs");
        sub->add_option("--gradient", cfg.gradient, "boundary gradient rule: second-order or forward");
        sub->add_option("--coefficient", cfg.coefficient, "corrector coefficient: level-average or corrector");
        sub->add_option("--a-formula", cfg.a_formula, "fdm a-update: pointwise or balance");
    };

    auto* validate = app.add_subcommand("validate", "check the data assumptions");
    validate->add_option("problem", cfg.problem, "problem file")->required();

    auto* solve = app.add_subcommand("solve", "recover a(t) and u(x,t)");
    common(solve, true);
    solve->add_option("--method", cfg.method, "spectral or fdm");

    auto* reproduce = app.add_subcommand("reproduce", "rerun the bundled example and check the tolerances");
    common(reproduce, false);
    cfg.method = "both";
    reproduce->add_option("--method", cfg.method, "spectral, fdm or both");

    auto* convergence = app.add_subcommand("convergence", "grid refinement study");
    common(convergence, true);
    convergence->add_option("--method", cfg.method, "fdm-forward, fdm-inverse or spectral");
    convergence->add_option("--levels", cfg.levels, "M values (K for spectral), comma separated")->delimiter(',');

    auto* stability = app.add_subcommand("stability", "perturb E and measure the response");
    common(stability, true);
    stability->add_option("--deltas", cfg.deltas, "perturbation sizes, comma separated")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (solve->parsed() && solve->count("--method") == 0) cfg.method = "fdm";
    if (convergence->parsed() && convergence->count("--method") == 0) cfg.method = "fdm-forward";
    if (stability->parsed()) cfg.method = "spectral";
    for (auto* sub : {solve, reproduce, convergence, stability}) {
        if (!sub->parsed()) continue;
        if (sub->count("--N")) cfg.N = n_steps;
        if (sub->count("--tol")) cfg.tol = tol;
        if (sub->count("--max-iter")) cfg.max_iter = max_iter;
    }

    if (validate->parsed()) return cmd_validate(cfg.problem, out, err);
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (reproduce->parsed()) return cmd_reproduce(cfg, out, err);
    if (convergence->parsed()) return cmd_convergence(cfg, out, err);
    return cmd_stability(cfg, out, err);
}

}  // namespace invheat::cli
