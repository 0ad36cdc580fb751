#include "invheat/fdm/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "invheat/errors.hpp"

namespace invheat::fdm {

StepSystem assemble_step(std::span<const double> u_old, double a_old, double a_new, std::span<const double> f_old,
                         std::span<const double> f_new, const FdmGrid& grid) {
    const auto m = static_cast<std::size_t>(grid.m());
    if (u_old.size() != m || f_old.size() != m || f_new.size() != m) {
        throw DomainError("step vectors must have M entries");
    }
    const double sum = a_old + a_new;
    if (!(sum > 0.0)) {
        throw DomainError("diffusivity sum a_j + a_j+1 = " + std::to_string(sum) + " is not positive");
    }
    const double h = grid.h();
    const double tau = grid.tau();
    const double r = 2.0 * h * h / (tau * sum);

    StepSystem s{numerics::BorderedTridiagonalMatrix(m), std::vector<double>(m), r};
    auto& a = s.matrix;
    std::fill(a.main.begin(), a.main.end(), -2.0 * (1.0 + r));
    std::fill(a.lower.begin(), a.lower.end(), 1.0);
    std::fill(a.upper.begin(), a.upper.end(), 1.0);
    a.top_right = 1.0;
    a.lower[m - 2] = 2.0;

    const double diag = 2.0 * (1.0 - r);
    for (std::size_t i = 0; i < m; ++i) {
        const double left = i == 0 ? u_old[m - 1] : u_old[i - 1];
        const double right = i + 1 < m ? u_old[i + 1] : 0.0;
        const double load = r * tau * (f_new[i] + f_old[i]);
        if (i + 1 == m) {
            s.rhs[i] = -2.0 * u_old[i - 1] + diag * u_old[i] - load;
        } else {
            s.rhs[i] = -left + diag * u_old[i] - right - load;
        }
    }
    return s;
}

double boundary_difference(GradientRule rule, double u0, double u1, double u2) {
    return rule == GradientRule::forward ? u1 - u0 : 0.5 * (-3.0 * u0 + 4.0 * u1 - u2);
}

double estimate_a(double et, double fin, double u1, double u0, double h, double guard) {
    return estimate_a_from_difference(et, fin, u1 - u0, h, guard);
}

double estimate_a_from_difference(double et, double fin, double difference, double h, double guard,
                                  std::size_t level, std::size_t iteration) {
    if (!(std::abs(difference) > guard)) {
        throw FlatGradientError("boundary gradient " + std::to_string(difference) + " is below the guard " +
                                    std::to_string(guard) + " at level " + std::to_string(level) +
                                    ", iteration " + std::to_string(iteration),
                                level, iteration);
    }
    return (-et + fin) * h / difference;
}

}  // namespace invheat::fdm
