#pragma once

#include <vector>

#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/fields.hpp"
#include "invheat/spectral/trajectory.hpp"

namespace invheat::analysis {

/// How well a computed field honours ∫u dx = E(t) and the boundary closures
/// u(0,t) = u(1,t), u_x(1,t) = 0.
struct ConsistencyReport {
    std::vector<double> times;
    std::vector<double> drift;  ///< |∫u(·,t_j)dx − E(t_j)|
    double max_drift = 0.0;
    double max_periodic_gap = 0.0;  ///< max |u(0,t) − u(1,t)|
    double max_end_slope = 0.0;     ///< max |u_x(1,t)|, one-sided second order
};

/// The x-integral uses the given rule on the field's own grid, which must be
/// uniform with enough cells for that rule (Simpson needs an even count).
ConsistencyReport check_consistency(const spectral::TemperatureField& u, const problem::TimeSignal& energy,
                                    numerics::QuadratureRule rule = numerics::QuadratureRule::composite_trapezoid);

}  // namespace invheat::analysis
