#include "invheat/analysis/consistency.hpp"

#include <algorithm>
#include <cmath>

#include "invheat/errors.hpp"

namespace invheat::analysis {

ConsistencyReport check_consistency(const spectral::TemperatureField& u, const problem::TimeSignal& energy,
                                    numerics::QuadratureRule rule) {
    u.validate();
    if (u.x.size() < 3) throw DomainError("consistency check needs at least three x points");
    const int cells = static_cast<int>(u.x.size()) - 1;
    const numerics::QuadratureConfig cfg{rule, cells};
    cfg.validate();
    const numerics::QuadratureNodes q = numerics::make_nodes(u.x.front(), u.x.back(), cfg);
    const double h = u.x[1] - u.x[0];
    const std::size_t last = u.x.size() - 1;

    ConsistencyReport r;
    r.times = u.t;
    r.drift.reserve(u.t.size());
    for (std::size_t j = 0; j < u.t.size(); ++j) {
        const auto& row = u.values[j];
        const double d = std::abs(q.apply(row) - energy(u.t[j]));
        r.drift.push_back(d);
        r.max_drift = std::max(r.max_drift, d);
        r.max_periodic_gap = std::max(r.max_periodic_gap, std::abs(row.front() - row.back()));
        const double slope = (3.0 * row[last] - 4.0 * row[last - 1] + row[last - 2]) / (2.0 * h);
        r.max_end_slope = std::max(r.max_end_slope, std::abs(slope));
    }
    return r;
}

}  // namespace invheat::analysis
