#include "invheat/spectral/coefficients.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "invheat/errors.hpp"
#include "invheat/spectral/basis.hpp"

namespace invheat::spectral {

namespace {

// weights[i] * Y_k(x[i]), row-major by k.
struct Projector {
    std::vector<double> nodes;
    std::vector<double> table;
    std::size_t modes = 0;

    std::vector<double> apply(const std::function<double(double)>& f) const {
        std::vector<double> values(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            values[i] = f(nodes[i]);
            if (!std::isfinite(values[i])) {
                throw EvaluationError("non-finite value at x=" + std::to_string(nodes[i]), nodes[i]);
            }
        }
        std::vector<double> out(modes, 0.0);
        for (std::size_t k = 0; k < modes; ++k) {
            const double* row = table.data() + k * nodes.size();
            double s = 0.0;
            for (std::size_t i = 0; i < nodes.size(); ++i) s += row[i] * values[i];
            out[k] = s;
        }
        return out;
    }
};

std::shared_ptr<const Projector> make_projector(int truncation, const numerics::QuadratureConfig& quad) {
    const numerics::QuadratureNodes q = numerics::make_nodes(0.0, 1.0, quad);
    auto p = std::make_shared<Projector>();
    p->nodes = q.nodes;
    p->modes = static_cast<std::size_t>(2 * truncation + 1);
    p->table.resize(p->modes * q.nodes.size());
    for (std::size_t k = 0; k < p->modes; ++k) {
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            p->table[k * q.nodes.size() + i] = q.weights[i] * eigen_y(static_cast<int>(k), q.nodes[i]);
        }
    }
    return p;
}

}  // namespace

SpectralCoefficients SpectralCoefficients::compute(const problem::ProblemData& p, int truncation,
                                                   const numerics::QuadratureConfig& x_quad) {
    if (truncation < 1) throw DomainError("truncation K must be at least 1");
    x_quad.validate();
    auto projector = make_projector(truncation, x_quad);
    std::vector<double> phi = projector->apply([&p](double x) { return p.phi(x); });
    const problem::SourceField source = p.source;
    SourceFn fn = [projector, source](double t) {
        return projector->apply([&source, t](double x) { return source(x, t); });
    };
    return {truncation, std::move(phi), std::move(fn), p.horizon};
}

SpectralCoefficients::SpectralCoefficients(int truncation, std::vector<double> phi, SourceFn source,
                                           double horizon)
    : truncation_(truncation), phi_(std::move(phi)), source_(std::move(source)), horizon_(horizon) {
    if (truncation_ < 1) throw DomainError("truncation K must be at least 1");
    if (phi_.size() != static_cast<std::size_t>(2 * truncation_ + 1)) {
        throw DomainError("expected 2K+1 initial coefficients");
    }
    if (!(horizon_ > 0.0)) throw DomainError("horizon must be positive");
}

std::vector<double> SpectralCoefficients::source(double t) const {
    std::vector<double> s = source_(t);
    if (s.size() != phi_.size()) throw DomainError("source projection returned the wrong number of modes");
    return s;
}

std::vector<std::vector<double>> SpectralCoefficients::source_table(std::span<const double> times) const {
    std::vector<std::vector<double>> rows;
    rows.reserve(times.size());
    for (double t : times) rows.push_back(source(t));
    return rows;
}

double SpectralCoefficients::tail_estimate() const {
    const int k_hi = truncation_;
    const int k_lo = std::max(1, k_hi - 7);
    // Least squares for log|φ_2k| = c + p log k over the nonzero entries.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double v = std::abs(phi_[static_cast<std::size_t>(2 * k)]);
        if (v <= 1e-300) continue;
        const double lx = std::log(static_cast<double>(k));
        const double ly = std::log(v);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * sxx - sx * sx;
    if (denom <= 0.0) return 0.0;
    const double slope = (n * sxy - sx * sy) / denom;
    const double c = std::exp((sy - slope * sx) / n);
    // Σ_{k>K} 8πk·c·k^p ≈ 8πc ∫_{K+1/2}^∞ s^{p+1} ds
    const double expo = slope + 2.0;
    if (expo >= 0.0) return std::numeric_limits<double>::infinity();
    return 8.0 * std::numbers::pi * c * std::pow(k_hi + 0.5, expo) / (-expo);
}

}  // namespace invheat::spectral
