#pragma once

#include <span>
#include <vector>

#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"
#include "qgauge/params.hpp"
#include "qgauge/wave_field.hpp"

namespace qgauge {

enum class Boundary {
    Dirichlet,  ///< psi = 0 outside the grid
    Periodic,   ///< point(n-1) neighbours point(0); the period is n * dx
};

/// Every supported equation has the form
///   H = -(hbar^2 / 2m) d^2/dx^2 - i hbar drift(t) d/dx + V(x, t).
struct HamiltonianTerms {
    double kinetic = 0.0;  ///< hbar^2 / 2m
    double drift = 0.0;    ///< velocity multiplying -i hbar d/dx
};

HamiltonianTerms hamiltonian_terms(const GaugeSpec& gauge, const PhysicalParams& params, double t);

/// V(x, t):
///   static        -qE0 x
///   dynamic       (qE0 t)^2 / 2m
///   free          0
///   accelerated   -[qE0 (xi + eta) - m xi eta_ddot]
///   moving free   0
double potential(const GaugeSpec& gauge, const PhysicalParams& params, double x, double t);

/// Second-order central-difference discretisation of H at one instant.
/// lower[i] couples row i to i-1 and upper[i] to i+1; for Periodic, lower[0]
/// and upper[n-1] hold the wrap-around corners (zero for Dirichlet).
struct TridiagonalOperator {
    std::vector<complex> lower;
    std::vector<complex> diag;
    std::vector<complex> upper;
    Boundary boundary = Boundary::Dirichlet;

    std::size_t size() const noexcept { return diag.size(); }
    std::vector<complex> apply(std::span<const complex> psi) const;
};

TridiagonalOperator discretize_hamiltonian(const GaugeSpec& gauge, const PhysicalParams& params,
                                           const SpatialGrid& grid, double t, Boundary boundary);

/// (H psi)(x_i) at t = wf.time(). The gauge must equal wf.gauge() (TagMismatch
/// otherwise) and t must equal wf.time() (InvalidArgument otherwise).
std::vector<complex> apply_hamiltonian(const WaveField& wf, const GaugeSpec& gauge, const PhysicalParams& params,
                                       double t, Boundary boundary = Boundary::Dirichlet);

}  // namespace qgauge
