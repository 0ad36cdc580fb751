#include "invheat/spectral/operator_p.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "invheat/errors.hpp"

namespace invheat::spectral {

double even_moment_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 2; i < v.size(); i += 2) s += 2.0 / (std::numbers::pi * static_cast<double>(i / 2)) * v[i];
    return s;
}

double even_slope_sum(const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 2; i < v.size(); i += 2) s += 8.0 * std::numbers::pi * static_cast<double>(i / 2) * v[i];
    return s;
}

FixedPointOperator::FixedPointOperator(const SpectralCoefficients& coeffs, const problem::TimeSignal& energy,
                                       std::vector<double> times)
    : coeffs_(&coeffs), times_(std::move(times)), source_(coeffs.source_table(times_)) {
    numerator_.resize(times_.size());
    for (std::size_t j = 0; j < times_.size(); ++j) {
        numerator_[j] = 2.0 * source_[j][0] + even_moment_sum(source_[j]) - energy.derivative(times_[j]);
    }
}

std::vector<double> FixedPointOperator::denominator(const CoefficientTrajectory& a) const {
    const bool same_grid = a.times() == times_;
    const ModeHistory h = same_grid ? evolve_modes(a, *coeffs_, source_, true)
                                    : evolve_modes(a.resampled(times_), *coeffs_, source_, true);
    std::vector<double> d(times_.size());
    for (std::size_t j = 0; j < times_.size(); ++j) d[j] = even_slope_sum(h.amplitudes[j]);
    return d;
}

std::vector<double> FixedPointOperator::evaluate(const CoefficientTrajectory& a) const {
    const std::vector<double> d = denominator(a);
    std::vector<double> out(times_.size());
    for (std::size_t j = 0; j < times_.size(); ++j) {
        if (!(d[j] >= degenerate_threshold)) {
            throw DegenerateProblemError("denominator of the fixed-point operator vanishes at t=" +
                                         std::to_string(times_[j]) + " (value " + std::to_string(d[j]) + ")");
        }
        out[j] = numerator_[j] / d[j];
    }
    return out;
}

CoefficientTrajectory FixedPointOperator::apply(const CoefficientTrajectory& a) const {
    return {times_, evaluate(a)};
}

CoefficientTrajectory apply_P(const CoefficientTrajectory& a, const SpectralCoefficients& coeffs,
                              const problem::TimeSignal& energy) {
    return FixedPointOperator(coeffs, energy, a.times()).apply(a);
}

}  // namespace invheat::spectral
