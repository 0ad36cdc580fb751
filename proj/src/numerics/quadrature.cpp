#include "invheat/numerics/quadrature.hpp"

#include <cmath>
#include <string>

#include "invheat/errors.hpp"

namespace invheat::numerics {

void QuadratureConfig::validate() const {
    if (panels < 2) {
        throw DomainError("quadrature needs at least 2 panels, got " + std::to_string(panels));
    }
    if (rule == QuadratureRule::composite_simpson && panels % 2 != 0) {
        throw DomainError("composite Simpson needs an even panel count, got " +
                          std::to_string(panels));
    }
}

QuadratureNodes make_nodes(double lo, double hi, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(lo < hi)) {
        throw DomainError("quadrature interval must satisfy lo < hi");
    }
    const auto n = static_cast<std::size_t>(cfg.panels);
    const double h = (hi - lo) / static_cast<double>(n);

    QuadratureNodes q;
    q.nodes.resize(n + 1);
    q.weights.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        // last node pinned to hi so interval ends are hit exactly
        q.nodes[i] = (i == n) ? hi : lo + h * static_cast<double>(i);
    }

    if (cfg.rule == QuadratureRule::composite_trapezoid) {
        for (std::size_t i = 0; i <= n; ++i) q.weights[i] = h;
        q.weights[0] = q.weights[n] = 0.5 * h;
    } else {
        const double third = h / 3.0;
        for (std::size_t i = 0; i <= n; ++i) {
            q.weights[i] = (i % 2 == 1 ? 4.0 : 2.0) * third;
        }
        q.weights[0] = q.weights[n] = third;
    }
    return q;
}

double QuadratureNodes::apply(std::span<const double> values) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * values[i];
    return sum;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg) {
    const QuadratureNodes q = make_nodes(lo, hi, cfg);
    double sum = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
        const double v = f(q.nodes[i]);
        if (!std::isfinite(v)) {
            throw EvaluationError("integrand is not finite at x = " + std::to_string(q.nodes[i]),
                                  q.nodes[i]);
        }
        sum += q.weights[i] * v;
    }
    return sum;
}

}  // namespace invheat::numerics
