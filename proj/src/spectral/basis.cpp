#include "invheat/spectral/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "invheat/errors.hpp"

namespace invheat::spectral {

namespace {

void check_index(int index) {
    if (index < 0) throw DomainError("basis index must be non-negative, got " + std::to_string(index));
}

}  // namespace

double eigen_x(int index, double x) {
    check_index(index);
    if (index == 0) return 2.0;
    const double w = 2.0 * std::numbers::pi * wavenumber(index);
    return index % 2 == 1 ? 4.0 * std::cos(w * x) : 4.0 * (1.0 - x) * std::sin(w * x);
}

double eigen_y(int index, double x) {
    check_index(index);
    if (index == 0) return x;
    const double w = 2.0 * std::numbers::pi * wavenumber(index);
    return index % 2 == 1 ? x * std::cos(w * x) : std::sin(w * x);
}

double project(const std::function<double(double)>& f, int index, const numerics::QuadratureConfig& quad) {
    check_index(index);
    return numerics::integrate([&](double x) { return f(x) * eigen_y(index, x); }, 0.0, 1.0, quad);
}

}  // namespace invheat::spectral
