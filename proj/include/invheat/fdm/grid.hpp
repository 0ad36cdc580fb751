#pragma once

namespace invheat::fdm {

/// Uniform grid on [0,1] x [0,T]: x_i = ih for i = 0..M+1 (x_{M+1} is the
/// fictitious point beyond x = 1) and t_j = jτ for j = 0..N.
class FdmGrid {
public:
    /// Throws DomainError unless M >= 4, N >= 1 and T > 0.
    FdmGrid(int m, int n, double horizon);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    double horizon() const noexcept { return horizon_; }
    double h() const noexcept { return 1.0 / m_; }
    double tau() const noexcept { return horizon_ / n_; }
    double x(int i) const noexcept { return static_cast<double>(i) / m_; }
    /// t_N is exactly T.
    double t(int j) const noexcept { return j == n_ ? horizon_ : j * tau(); }

private:
    int m_;
    int n_;
    double horizon_;
};

}  // namespace invheat::fdm
