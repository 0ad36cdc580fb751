#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace invheat::spectral {

/// Sampled diffusivity a(t) > 0 on a strictly increasing time grid,
/// piecewise-linear in between.
class CoefficientTrajectory {
public:
    /// Throws DomainError on size mismatch, non-increasing times, or a
    /// non-positive or non-finite value.
    CoefficientTrajectory(std::vector<double> times, std::vector<double> values);

    static CoefficientTrajectory constant(double horizon, int cells, double value);
    static CoefficientTrajectory sample(const std::function<double(double)>& a, double horizon, int cells);
    static CoefficientTrajectory sample(const std::function<double(double)>& a, std::vector<double> times);

    double operator()(double t) const;

    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double horizon() const noexcept { return times_.back(); }

    /// ∫_0^{t_j} a for every node (exact for the piecewise-linear interpolant).
    std::vector<double> cumulative() const;

    /// Samples on another grid by interpolation.
    CoefficientTrajectory resampled(std::vector<double> times) const;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

enum class Provenance { spectral, fdm };

std::string_view to_string(Provenance p);

/// u(x,t) on a tensor grid; values[j][i] = u(x[i], t[j]).
struct TemperatureField {
    std::vector<double> x;
    std::vector<double> t;
    std::vector<std::vector<double>> values;
    Provenance provenance = Provenance::spectral;

    /// Throws DomainError on inconsistent shapes or non-finite entries.
    void validate() const;

    std::span<const double> level(std::size_t j) const { return values[j]; }
};

}  // namespace invheat::spectral
