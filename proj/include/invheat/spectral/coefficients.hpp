#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "invheat/numerics/quadrature.hpp"
#include "invheat/problem/problem.hpp"

namespace invheat::spectral {

inline constexpr int default_truncation = 64;

/// Projections of the data onto the adjoint basis, indices 0..2K:
/// phi()[k] = (φ, Y_k) and source(t)[k] = (F(·,t), Y_k).
class SpectralCoefficients {
public:
    using SourceFn = std::function<std::vector<double>(double)>;

    /// Projects φ once; F is projected lazily at each requested time through
    /// a precomputed table of quadrature weights times Y_k(x_i).
    static SpectralCoefficients compute(const problem::ProblemData& p, int truncation = default_truncation,
                                        const numerics::QuadratureConfig& x_quad = numerics::QuadratureConfig{});

    /// From explicit values; `source` must return 2K+1 entries.
    SpectralCoefficients(int truncation, std::vector<double> phi, SourceFn source, double horizon);

    int truncation() const noexcept { return truncation_; }
    std::size_t size() const noexcept { return phi_.size(); }
    double horizon() const noexcept { return horizon_; }

    const std::vector<double>& phi() const noexcept { return phi_; }
    std::vector<double> source(double t) const;

    /// source(t) for every t; row j holds the coefficients at times[j].
    std::vector<std::vector<double>> source_table(std::span<const double> times) const;

    /// Estimate of Σ_{k>K} 8πk|φ_{2k}|, from a power-law fit to the last
    /// eight even coefficients. Infinite when the fitted decay is too slow
    /// to sum; zero when those coefficients vanish.
    double tail_estimate() const;

private:
    int truncation_;
    std::vector<double> phi_;
    SourceFn source_;
    double horizon_;
};

}  // namespace invheat::spectral
