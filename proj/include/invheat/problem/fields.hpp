#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "invheat/problem/expression.hpp"

namespace invheat::problem {

inline constexpr int max_derivative_order = 4;

/// φ(x) on [0,1], with derivatives up to order 4.
class ScalarField1D {
public:
    /// Analytic derivatives through symbolic differentiation.
    static ScalarField1D from_expression(const Expression& e);
    /// Derivatives by finite differences, stencils kept inside [0,1].
    static ScalarField1D from_function(std::function<double(double)> f);

    double operator()(double x) const { return value_(x); }
    double derivative(int order, double x) const;

    const std::optional<Expression>& expression() const { return expr_; }

private:
    std::function<double(double)> value_;
    std::array<std::function<double(double)>, max_derivative_order> derivs_{};
    std::optional<Expression> expr_;
};

/// Signal on [0,T] with its first derivative. Used for E(t) and exact a(t).
class TimeSignal {
public:
    static TimeSignal from_expression(const Expression& e);
    /// E′ by 4th-order central differences, one-sided near 0 and T.
    static TimeSignal from_function(std::function<double(double)> f, double horizon);
    /// Value and derivative both supplied.
    static TimeSignal from_functions(std::function<double(double)> f, std::function<double(double)> derivative);
    /// Piecewise-linear samples; E′ by 4th-order differences on the sample
    /// grid, then linearly interpolated.
    static TimeSignal from_samples(std::vector<double> times, std::vector<double> values);

    double operator()(double t) const { return value_(t); }
    double derivative(double t) const { return deriv_(t); }

    const std::optional<Expression>& expression() const { return expr_; }

private:
    std::function<double(double)> value_;
    std::function<double(double)> deriv_;
    std::optional<Expression> expr_;
};

/// F(x,t) on [0,1]x[0,T], with x-derivatives up to order 4.
class SourceField {
public:
    static SourceField from_expression(const Expression& e);
    static SourceField from_function(std::function<double(double, double)> f);

    double operator()(double x, double t) const { return value_(x, t); }
    double x_derivative(int order, double x, double t) const;

    const std::optional<Expression>& expression() const { return expr_; }

private:
    std::function<double(double, double)> value_;
    std::array<std::function<double(double, double)>, max_derivative_order> derivs_{};
    std::optional<Expression> expr_;
};

/// Finite-difference weights for the `order`-th derivative at `at` from
/// values on `nodes` (Fornberg's recursion). Exposed for tests.
std::vector<double> fd_weights(std::span<const double> nodes, double at, int order);

/// Derivative of f at x by an equispaced stencil of spacing h, shifted so it
/// stays inside [lo, hi].
double fd_derivative(const std::function<double(double)>& f, double x, int order, double lo,
                     double hi, double h);

}  // namespace invheat::problem
