#include "invheat/spectral/trajectory.hpp"

#include <cmath>
#include <string>

#include "invheat/errors.hpp"
#include "invheat/numerics/interpolate.hpp"

namespace invheat::spectral {

CoefficientTrajectory::CoefficientTrajectory(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() < 2 || times_.size() != values_.size()) {
        throw DomainError("trajectory needs at least two matching samples");
    }
    for (std::size_t j = 0; j < times_.size(); ++j) {
        if (j > 0 && !(times_[j] > times_[j - 1])) throw DomainError("trajectory times must increase strictly");
        if (!std::isfinite(values_[j]) || !(values_[j] > 0.0)) {
            throw DomainError("diffusivity must be positive, got " + std::to_string(values_[j]) + " at t=" +
                              std::to_string(times_[j]));
        }
    }
}

CoefficientTrajectory CoefficientTrajectory::constant(double horizon, int cells, double value) {
    auto times = numerics::uniform_grid(0.0, horizon, cells);
    std::vector<double> values(times.size(), value);
    return {std::move(times), std::move(values)};
}

CoefficientTrajectory CoefficientTrajectory::sample(const std::function<double(double)>& a, double horizon,
                                                    int cells) {
    return sample(a, numerics::uniform_grid(0.0, horizon, cells));
}

CoefficientTrajectory CoefficientTrajectory::sample(const std::function<double(double)>& a,
                                                    std::vector<double> times) {
    std::vector<double> values(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) values[j] = a(times[j]);
    return {std::move(times), std::move(values)};
}

double CoefficientTrajectory::operator()(double t) const { return numerics::interpolate(times_, values_, t); }

std::vector<double> CoefficientTrajectory::cumulative() const {
    std::vector<double> c(times_.size(), 0.0);
    for (std::size_t j = 1; j < times_.size(); ++j) {
        c[j] = c[j - 1] + 0.5 * (times_[j] - times_[j - 1]) * (values_[j] + values_[j - 1]);
    }
    return c;
}

CoefficientTrajectory CoefficientTrajectory::resampled(std::vector<double> times) const {
    std::vector<double> values(times.size());
    for (std::size_t j = 0; j < times.size(); ++j) values[j] = (*this)(times[j]);
    return {std::move(times), std::move(values)};
}

std::string_view to_string(Provenance p) { return p == Provenance::spectral ? "spectral" : "fdm"; }

void TemperatureField::validate() const {
    if (values.size() != t.size()) throw DomainError("temperature field: row count differs from t-grid");
    for (const auto& row : values) {
        if (row.size() != x.size()) throw DomainError("temperature field: row length differs from x-grid");
        for (double v : row) {
            if (!std::isfinite(v)) throw DomainError("temperature field has a non-finite entry");
        }
    }
}

}  // namespace invheat::spectral
