#pragma once

#include <functional>
#include <span>
#include <vector>

namespace invheat::numerics {

enum class QuadratureRule { composite_trapezoid, composite_simpson };

/// Composite rule on equal panels. Simpson requires an even panel count.
struct QuadratureConfig {
    QuadratureRule rule = QuadratureRule::composite_simpson;
    int panels = 512;

    /// Throws DomainError when panels < 2 or Simpson with odd panels.
    void validate() const;

    static QuadratureConfig simpson(int panels) { return {QuadratureRule::composite_simpson, panels}; }
    static QuadratureConfig trapezoid(int panels) { return {QuadratureRule::composite_trapezoid, panels}; }
};

/// Defaults used for integrals over [0,1] and over [0,T].
inline constexpr int default_x_panels = 512;
inline constexpr int default_t_panels = 256;

/// Nodes and weights of a composite rule on [lo, hi]. Reused when the same
/// rule is applied to many integrands (projections onto a basis).
struct QuadratureNodes {
    std::vector<double> nodes;
    std::vector<double> weights;

    double apply(std::span<const double> values) const;
};

QuadratureNodes make_nodes(double lo, double hi, const QuadratureConfig& cfg);

/// ∫_lo^hi f. Throws EvaluationError (carrying the node) if f is not finite
/// at some node.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg);

}  // namespace invheat::numerics
