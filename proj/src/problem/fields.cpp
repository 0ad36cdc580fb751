#include "invheat/problem/fields.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "invheat/errors.hpp"
#include "invheat/numerics/interpolate.hpp"

namespace invheat::problem {

std::vector<double> fd_weights(std::span<const double> nodes, double at, int order) {
    // Fornberg, "Generation of finite difference formulas on arbitrarily
    // spaced grids" (1988), single-point variant.
    const int n = static_cast<int>(nodes.size()) - 1;
    const int m = order;
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1),
                                       std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - at;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[static_cast<std::size_t>(i)] - at;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) w[static_cast<std::size_t>(i)] = c[i][m];
    return w;
}

namespace {

// Stencil sizes giving 4th-order accuracy for the centered case.
int stencil_points(int order) { return order <= 2 ? 5 : 7; }

}  // namespace

double fd_derivative(const std::function<double(double)>& f, double x, int order, double lo,
                     double hi, double h) {
    if (order == 0) return f(x);
    const int pts = stencil_points(order);
    const int half = pts / 2;
    // Shift so every node lies in [lo, hi].
    double first = x - half * h;
    if (first < lo) first = lo;
    if (first + (pts - 1) * h > hi) first = hi - (pts - 1) * h;
    std::vector<double> nodes(static_cast<std::size_t>(pts));
    for (int i = 0; i < pts; ++i) nodes[static_cast<std::size_t>(i)] = first + i * h;
    const std::vector<double> w = fd_weights(nodes, x, order);
    double s = 0.0;
    for (int i = 0; i < pts; ++i) s += w[static_cast<std::size_t>(i)] * f(nodes[static_cast<std::size_t>(i)]);
    return s;
}

namespace {

double fd_step(int order) { return order <= 2 ? 1e-3 : 1e-2; }

void check_order(int order) {
    if (order < 0 || order > max_derivative_order) {
        throw DomainError("derivative order must lie in [0, 4], got " + std::to_string(order));
    }
}

}  // namespace

// ---------------------------------------------------------------------------

ScalarField1D ScalarField1D::from_expression(const Expression& e) {
    ScalarField1D f;
    f.expr_ = e;
    f.value_ = [e](double x) { return e.evaluate(x, 0.0); };
    Expression d = e;
    for (int k = 0; k < max_derivative_order; ++k) {
        d = d.derivative(Variable::x);
        f.derivs_[static_cast<std::size_t>(k)] = [d](double x) { return d.evaluate(x, 0.0); };
    }
    return f;
}

ScalarField1D ScalarField1D::from_function(std::function<double(double)> fn) {
    ScalarField1D f;
    f.value_ = std::move(fn);
    return f;
}

double ScalarField1D::derivative(int order, double x) const {
    check_order(order);
    if (order == 0) return value_(x);
    if (const auto& d = derivs_[static_cast<std::size_t>(order - 1)]) return d(x);
    return fd_derivative(value_, x, order, 0.0, 1.0, fd_step(order));
}

// ---------------------------------------------------------------------------

TimeSignal TimeSignal::from_expression(const Expression& e) {
    TimeSignal s;
    s.expr_ = e;
    s.value_ = [e](double t) { return e.evaluate(0.0, t); };
    const Expression d = e.derivative(Variable::t);
    s.deriv_ = [d](double t) { return d.evaluate(0.0, t); };
    return s;
}

TimeSignal TimeSignal::from_function(std::function<double(double)> fn, double horizon) {
    if (!(horizon > 0.0)) throw DomainError("time signal horizon must be positive");
    TimeSignal s;
    s.value_ = fn;
    const double h = 1e-3 * horizon;
    s.deriv_ = [fn, horizon, h](double t) { return fd_derivative(fn, t, 1, 0.0, horizon, h); };
    return s;
}

TimeSignal TimeSignal::from_functions(std::function<double(double)> f, std::function<double(double)> derivative) {
    TimeSignal s;
    s.value_ = std::move(f);
    s.deriv_ = std::move(derivative);
    return s;
}

TimeSignal TimeSignal::from_samples(std::vector<double> times, std::vector<double> values) {
    if (times.size() != values.size() || times.size() < 5) {
        throw DomainError("sampled time signal needs at least 5 matching samples");
    }
    for (std::size_t j = 1; j < times.size(); ++j) {
        if (!(times[j] > times[j - 1])) throw DomainError("sample times must be strictly increasing");
    }
    const std::size_t n = times.size();
    std::vector<double> deriv(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t first = std::min(j >= 2 ? j - 2 : 0, n - 5);
        const std::span<const double> nodes(times.data() + first, 5);
        const std::vector<double> w = fd_weights(nodes, times[j], 1);
        double s = 0.0;
        for (std::size_t i = 0; i < 5; ++i) s += w[i] * values[first + i];
        deriv[j] = s;
    }
    auto tp = std::make_shared<const std::vector<double>>(std::move(times));
    auto vp = std::make_shared<const std::vector<double>>(std::move(values));
    auto dp = std::make_shared<const std::vector<double>>(std::move(deriv));
    TimeSignal s;
    s.value_ = [tp, vp](double t) { return numerics::interpolate(*tp, *vp, t); };
    s.deriv_ = [tp, dp](double t) { return numerics::interpolate(*tp, *dp, t); };
    return s;
}

// ---------------------------------------------------------------------------

SourceField SourceField::from_expression(const Expression& e) {
    SourceField f;
    f.expr_ = e;
    f.value_ = [e](double x, double t) { return e.evaluate(x, t); };
    Expression d = e;
    for (int k = 0; k < max_derivative_order; ++k) {
        d = d.derivative(Variable::x);
        f.derivs_[static_cast<std::size_t>(k)] = [d](double x, double t) { return d.evaluate(x, t); };
    }
    return f;
}

SourceField SourceField::from_function(std::function<double(double, double)> fn) {
    SourceField f;
    f.value_ = std::move(fn);
    return f;
}

double SourceField::x_derivative(int order, double x, double t) const {
    check_order(order);
    if (order == 0) return value_(x, t);
    if (const auto& d = derivs_[static_cast<std::size_t>(order - 1)]) return d(x, t);
    const auto& v = value_;
    return fd_derivative([&v, t](double xx) { return v(xx, t); }, x, order, 0.0, 1.0, fd_step(order));
}

}  // namespace invheat::problem
