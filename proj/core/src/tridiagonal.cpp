#include "qgauge/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qgauge/errors.hpp"

namespace qgauge {

namespace {

void check_sizes(std::size_t lower, std::size_t diag, std::size_t upper) {
    if (diag < 2 || lower != diag || upper != diag) {
        throw InvalidArgument("tridiagonal solve: bands must share a length >= 2");
    }
}

TridiagonalSolver::complex checked_inverse(TridiagonalSolver::complex pivot, std::size_t row) {
    if (!(std::abs(pivot) > std::numeric_limits<double>::min()) || !std::isfinite(std::abs(pivot))) {
        throw SolverBreakdown("tridiagonal solve: zero or non-finite pivot at row " + std::to_string(row));
    }
    return 1.0 / pivot;
}

}  // namespace

void TridiagonalSolver::factor(std::span<const complex> lower, std::span<const complex> diag,
                               std::span<const complex> upper) {
    check_sizes(lower.size(), diag.size(), upper.size());
    const std::size_t n = diag.size();
    lower_.assign(lower.begin(), lower.end());
    upper_over_pivot_.resize(n);
    inverse_pivot_.resize(n);
    inverse_pivot_[0] = checked_inverse(diag[0], 0);
    upper_over_pivot_[0] = upper[0] * inverse_pivot_[0];
    for (std::size_t i = 1; i < n; ++i) {
        inverse_pivot_[i] = checked_inverse(diag[i] - lower[i] * upper_over_pivot_[i - 1], i);
        upper_over_pivot_[i] = i + 1 < n ? upper[i] * inverse_pivot_[i] : complex{};
    }
}

void TridiagonalSolver::solve(std::span<const complex> rhs, std::span<complex> x) const {
    const std::size_t n = size();
    if (rhs.size() != n || x.size() != n) throw InvalidArgument("tridiagonal solve: size mismatch");
    x[0] = rhs[0] * inverse_pivot_[0];
    for (std::size_t i = 1; i < n; ++i) {
        x[i] = (rhs[i] - lower_[i] * x[i - 1]) * inverse_pivot_[i];
    }
    for (std::size_t i = n - 1; i > 0; --i) {
        x[i - 1] -= upper_over_pivot_[i - 1] * x[i];
    }
}

void CyclicTridiagonalSolver::factor(std::span<const complex> lower, std::span<const complex> diag,
                                     std::span<const complex> upper) {
    check_sizes(lower.size(), diag.size(), upper.size());
    const std::size_t n = diag.size();
    if (n < 3) throw InvalidArgument("cyclic tridiagonal solve: need at least 3 rows");
    // A = T + u v^T with u = (gamma, 0, ..., A[n-1][0]), v = (1, 0, ..., A[0][n-1] / gamma).
    gamma_ = -diag[0];
    if (std::abs(gamma_) == 0.0) gamma_ = -1.0;
    corner_ratio_ = lower[0] / gamma_;
    std::vector<complex> modified(diag.begin(), diag.end());
    modified[0] -= gamma_;
    modified[n - 1] -= upper[n - 1] * corner_ratio_;
    base_.factor(lower, modified, upper);

    std::vector<complex> u(n);
    u[0] = gamma_;
    u[n - 1] = upper[n - 1];
    z_.resize(n);
    base_.solve(u, z_);
    denominator_ = 1.0 + z_[0] + corner_ratio_ * z_[n - 1];
    if (!(std::abs(denominator_) > std::numeric_limits<double>::min())) {
        throw SolverBreakdown("cyclic tridiagonal solve: singular Sherman-Morrison update");
    }
    scratch_.resize(n);
}

void CyclicTridiagonalSolver::solve(std::span<const complex> rhs, std::span<complex> x) const {
    const std::size_t n = z_.size();
    if (rhs.size() != n || x.size() != n) throw InvalidArgument("cyclic tridiagonal solve: size mismatch");
    base_.solve(rhs, scratch_);
    const complex factor = (scratch_[0] + corner_ratio_ * scratch_[n - 1]) / denominator_;
    for (std::size_t i = 0; i < n; ++i) x[i] = scratch_[i] - factor * z_[i];
}

}  // namespace qgauge
