#pragma once

#include <optional>

namespace qgauge {

/// Size of (i hbar d/dt - H) psi for a claimed solution.
///
/// l2_residual and linf_residual are the Richardson-extrapolated residual
/// (one level, dx and dt_fd halved together) relative to reference_norm; the
/// raw_* members are the plain second-order residual at the requested
/// resolution. convergence_order is log2 of the raw L-infinity ratio between
/// the two resolutions.
struct ResidualReport {
    double l2_residual = 0.0;
    double linf_residual = 0.0;
    double raw_l2_residual = 0.0;
    double raw_linf_residual = 0.0;
    double reference_norm = 0.0;
    std::optional<double> convergence_order;
};

}  // namespace qgauge
