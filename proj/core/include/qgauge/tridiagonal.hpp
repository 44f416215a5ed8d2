#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qgauge {

/// Thomas algorithm for complex tridiagonal systems, factored once and solved
/// for many right-hand sides. lower[0] and upper[n-1] are ignored.
///
/// No pivoting: every leading principal minor must be non-zero, which holds
/// for the Crank-Nicolson matrices I + i dt H / 2 hbar with H Hermitian.
class TridiagonalSolver {
public:
    using complex = std::complex<double>;

    TridiagonalSolver() = default;

    /// Throws SolverBreakdown on a zero pivot.
    void factor(std::span<const complex> lower, std::span<const complex> diag, std::span<const complex> upper);

    /// x may alias rhs.
    void solve(std::span<const complex> rhs, std::span<complex> x) const;

    std::size_t size() const noexcept { return inverse_pivot_.size(); }

private:
    std::vector<complex> lower_;
    std::vector<complex> upper_over_pivot_;  // c'_i
    std::vector<complex> inverse_pivot_;
};

/// Cyclic tridiagonal solve via Sherman-Morrison on top of TridiagonalSolver.
/// lower[0] is the corner A[0][n-1] and upper[n-1] the corner A[n-1][0].
class CyclicTridiagonalSolver {
public:
    using complex = std::complex<double>;

    void factor(std::span<const complex> lower, std::span<const complex> diag, std::span<const complex> upper);
    void solve(std::span<const complex> rhs, std::span<complex> x) const;

private:
    TridiagonalSolver base_;
    std::vector<complex> z_;  // base^{-1} u
    complex gamma_{};
    complex corner_ratio_{};  // lower[0] / gamma
    complex denominator_{};   // 1 + v^T z
    mutable std::vector<complex> scratch_;
};

}  // namespace qgauge
