#include "invheat/analysis/cross_validate.hpp"

#include <algorithm>
#include <cmath>

#include "invheat/errors.hpp"
#include "invheat/spectral/coefficients.hpp"
#include "invheat/spectral/forward.hpp"

namespace invheat::analysis {

namespace {

double field_gap(const spectral::TemperatureField& a, const spectral::TemperatureField& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < a.values.size(); ++j) {
        for (std::size_t i = 0; i < a.values[j].size(); ++i) m = std::max(m, std::abs(a.values[j][i] - b.values[j][i]));
    }
    return m;
}

template <class Fn>
auto classify(Fn&& fn, RunOutcome& outcome, std::string& message) -> std::optional<decltype(fn())> {
    try {
        return fn();
    } catch (const DegenerateProblemError& e) {
        outcome = RunOutcome::unidentifiable;
        message = e.what();
    } catch (const FlatGradientError& e) {
        outcome = RunOutcome::unidentifiable;
        message = e.what();
    } catch (const Error& e) {
        outcome = RunOutcome::other_failure;
        message = e.what();
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(RunOutcome o) {
    switch (o) {
        case RunOutcome::success: return "success";
        case RunOutcome::unidentifiable: return "unidentifiable";
        case RunOutcome::other_failure: return "failure";
    }
    return "?";
}

CrossValidation cross_validate(const problem::ProblemData& p, const spectral::SpectralOptions& spectral_options,
                               const fdm::FdmGrid& grid, const fdm::FdmOptions& fdm_options) {
    CrossValidation cv;
    auto spec = classify([&] { return spectral::solve_inverse_spectral(p, spectral_options); }, cv.spectral_outcome,
                         cv.spectral_message);
    auto disc = classify([&] { return fdm::run_inverse_fdm(p, grid, fdm_options); }, cv.fdm_outcome, cv.fdm_message);
    if (!spec || !disc) return cv;

    const std::vector<double> t = disc->times();
    double gap = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) gap = std::max(gap, std::abs(spec->a(t[j]) - disc->a[j]));
    cv.a_discrepancy = gap;

    const spectral::TemperatureField fd = disc->field();
    const auto coeffs = spectral::SpectralCoefficients::compute(p, spectral_options.truncation, spectral_options.x_quad);
    const spectral::TemperatureField sp = spectral::forward_solve(spec->a, coeffs, fd.x, fd.t);
    cv.u_discrepancy = field_gap(sp, fd);
    return cv;
}

CrossValidation cross_validate_forward(const problem::ProblemData& p, int truncation, const fdm::FdmGrid& grid) {
    if (!p.exact_a) throw DomainError("exact diffusivity required for the forward comparison");
    CrossValidation cv;
    std::vector<double> t(static_cast<std::size_t>(grid.n()) + 1);
    for (int j = 0; j <= grid.n(); ++j) t[static_cast<std::size_t>(j)] = grid.t(j);
    const auto a = spectral::CoefficientTrajectory::sample([&p](double s) { return (*p.exact_a)(s); }, t);
    const spectral::TemperatureField fd = fdm::run_forward_fdm(p, a, grid);

    // The spectral forward solve runs on a finer trajectory grid, since its
    // time error is set by the trajectory cell size.
    const auto fine = spectral::CoefficientTrajectory::sample([&p](double s) { return (*p.exact_a)(s); }, p.horizon, 1024);
    const auto coeffs = spectral::SpectralCoefficients::compute(p, truncation);
    const spectral::TemperatureField sp = spectral::forward_solve(fine, coeffs, fd.x, fd.t);
    cv.u_discrepancy = field_gap(sp, fd);
    return cv;
}

}  // namespace invheat::analysis
