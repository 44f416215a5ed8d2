#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qgauge/hamiltonian.hpp"
#include "qgauge/wave_field.hpp"

namespace qgauge {

struct PropagatorConfig {
    double dt = 1e-3;
    std::size_t n_steps = 1;
    Boundary boundary = Boundary::Dirichlet;
    std::size_t record_every = 1;

    /// Throws InvalidArgument unless dt > 0, n_steps >= 1 and 1 <= record_every <= n_steps.
    void validate() const;
    double total_time() const noexcept { return dt * static_cast<double>(n_steps); }
};

struct Observables {
    double norm = 0.0;
    double mean_x = 0.0;
    double canonical_p = 0.0;  ///< <-i hbar d/dx>, central differences
    double kinetic_p = 0.0;    ///< canonical_p - qA/c
    double var_x = 0.0;
};

/// Expectation values at wf.time() (trapezoid quadrature, uniform weights for
/// Periodic, normalised by the squared norm). Throws InvalidArgument for a zero field.
Observables observables(const WaveField& wf, const GaugeSpec& gauge, const PhysicalParams& params,
                        Boundary boundary = Boundary::Dirichlet);

struct ObservableTrace {
    std::vector<double> times;
    std::vector<double> norm;
    std::vector<double> mean_x;
    std::vector<double> canonical_p;
    std::vector<double> kinetic_p;
    std::vector<double> var_x;

    void push(double t, const Observables& o);
    std::size_t size() const noexcept { return times.size(); }
};

struct PropagationResult {
    WaveField field;
    ObservableTrace trace;
    /// Largest |psi| at either wall relative to max |psi|, over recorded steps.
    double max_boundary_amplitude = 0.0;
    std::vector<std::string> warnings;
};

/// Boundary amplitude above which a Dirichlet run reports a warning.
inline constexpr double boundary_warning_level = 1e-8;

using SnapshotCallback = std::function<void(const WaveField&)>;

/// Crank-Nicolson propagation
///   (1 + i dt H(t + dt/2) / 2 hbar) psi_{n+1} = (1 - i dt H(t + dt/2) / 2 hbar) psi_n
/// with a tridiagonal (Dirichlet) or cyclic tridiagonal (Periodic) solve.
/// Observables are recorded at step 0, every record_every steps and at the end;
/// `on_record` (optional) sees the same fields.
///
/// Throws TagMismatch if wf0.gauge() differs from `gauge`, and
/// NumericalBreakdown (carrying the last good time) on non-finite amplitudes
/// or a singular step matrix.
PropagationResult crank_nicolson_propagate(const WaveField& wf0, const GaugeSpec& gauge,
                                           const PhysicalParams& params, const PropagatorConfig& config,
                                           const SnapshotCallback& on_record = {});

/// Normalised Gaussian (2 pi sigma^2)^{-1/4} exp(-(x-x0)^2 / 4 sigma^2 + i p0 x / hbar);
/// sigma is the position standard deviation.
WaveField gaussian_packet(const SpatialGrid& grid, double x0, double p0, double sigma, double hbar,
                          GaugeSpec gauge, FrameLabel frame = FrameLabel::Inertial, double t = 0.0);

}  // namespace qgauge
