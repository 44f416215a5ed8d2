#pragma once

#include "qgauge/analytic_field.hpp"
#include "qgauge/params.hpp"
#include "qgauge/residual_report.hpp"
#include "qgauge/solutions.hpp"

namespace qgauge {

inline constexpr double default_dt_fd = 1e-4;

/// PDE residual r = i hbar (psi(t+h) - psi(t-h)) / 2h - H psi(t) of an
/// analytic field on the interior points of `grid`, with h = dt_fd.
///
/// The residual is evaluated at (dx, h) and (dx/2, h/2). The report carries the
/// raw residual at (dx, h), one Richardson level (4 r_fine - r_coarse) / 3, and
/// the observed convergence order. All norms are relative to the termwise
/// scale max_i(|i hbar psi_t| + |kinetic| + |drift| + |V psi|).
///
/// The field's gauge tag must equal `gauge` (TagMismatch otherwise).
ResidualReport residual(const AnalyticField& field, const GaugeSpec& gauge, const SpatialGrid& grid, double t,
                        const PhysicalParams& params, double dt_fd = default_dt_fd);

/// True for the pairings each closed form is claimed to solve:
/// Psi1/Psi2Static-static, Psi1/Psi2Dynamic-dynamic, FreePlaneWave/BerryBalazs-free.
bool is_valid_pairing(SolutionKind kind, const GaugeSpec& gauge) noexcept;

/// Residual of a closed-form solution; throws TagMismatch for invalid pairings.
ResidualReport residual(const SolutionId& sol, const GaugeSpec& gauge, const SpatialGrid& grid, double t,
                        const PhysicalParams& params, double dt_fd = default_dt_fd);

}  // namespace qgauge
