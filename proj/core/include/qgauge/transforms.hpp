#pragma once

#include <cstddef>

#include "qgauge/analytic_field.hpp"
#include "qgauge/params.hpp"
#include "qgauge/trajectory.hpp"
#include "qgauge/wave_field.hpp"

namespace qgauge {

// Gauge transformation between the static and dynamic gauges, and the two
// extended Galilean transformations (EGTs) whose composition reproduces it:
//
//   static, (x,t) --egt_forward--> accelerated (xi,tau) --to_free_frame--> free (xi,tau)
//                 --egt_backward_to_dynamic--> dynamic, (x,t)
//
// Every operation exists for AnalyticField (re-evaluation mode: exact, the
// shifted coordinate is evaluated in closed form) and for WaveField
// (interpolation mode: cubic interpolation onto a caller-supplied grid).
// Gauge/frame tags are checked on entry and updated on exit; a mismatch
// throws TagMismatch.

enum class GaugeDirection { StaticToDynamic, DynamicToStatic };

/// Numerical coefficients of the EGT phases. The defaults are the exact
/// values; verification suites perturb one at a time as a negative control.
struct PhaseCoefficients {
    double action_integral = 0.5;      ///< c in  int_0^tau c m eta_dot^2 dt
    double action_linear = 1.0;        ///< c in  c m xi eta_dot(tau)
    double free_frame_cubic = 1.0 / 6; ///< c in  exp(-i c (qE0)^2 tau^3 / (m hbar))
    double dynamic_cubic = 1.0 / 6;    ///< c in  exp(-i c (qE0)^2 t^3 / (m hbar))
};

struct PhaseMapReport {
    double max_abs_deviation = 0.0;
    std::size_t compared_points = 0;
};

/// Pointwise comparison of two fields on the same grid.
PhaseMapReport compare_fields(const WaveField& a, const WaveField& b);

/// E = -d(phi)/dx - (1/c) dA/dt for the static or dynamic gauge; equals E0 for
/// both. Throws InvalidArgument for the frame-only gauge kinds.
double electric_field_of_gauge(const GaugeSpec& gauge, const PhysicalParams& params, double x, double t);

/// exp(-i qE0 t x / hbar): multiplies a static-gauge solution into its dynamic-gauge twin.
complex gauge_phase(double x, double t, const PhysicalParams& params);

WaveField gauge_transform(const WaveField& wf, GaugeDirection direction, const PhysicalParams& params);
AnalyticField gauge_transform(const AnalyticField& field, GaugeDirection direction,
                              const PhysicalParams& params);

/// Forward EGT phase f(xi, tau) = int_0^tau m eta_dot^2 / 2 dt + m xi eta_dot(tau).
double egt_action_phase(double xi, double tau, const FrameTrajectory& trajectory, const PhysicalParams& params,
                        const PhaseCoefficients& coefficients = {});

/// Backward EGT phase f(x, t) = int_0^t m eta_dot^2 / 2 dtau - m x eta_dot(t).
/// Note the sign of the linear term, opposite to egt_action_phase.
double backward_action_phase(double x, double t, const FrameTrajectory& trajectory,
                             const PhysicalParams& params);

/// psi''(xi, tau) = exp(-i f(xi, tau) / hbar) psi(xi + eta(tau), tau).
/// Input: static gauge, inertial. Output: AcceleratedFrame{trajectory}, accelerated.
AnalyticField egt_forward(const AnalyticField& field, const FrameTrajectory& trajectory,
                          const PhysicalParams& params, const PhaseCoefficients& coefficients = {});

/// Interpolation-mode egt_forward onto the xi-grid `target`. Throws OutOfDomain
/// when some xi + eta(tau) leaves the source grid.
WaveField egt_forward(const WaveField& wf, const FrameTrajectory& trajectory, const PhysicalParams& params,
                      const SpatialGrid& target, const PhaseCoefficients& coefficients = {});

/// Inverse of egt_forward: psi(x, t) = exp(+i f(x - eta, t) / hbar) psi''(x - eta, t).
AnalyticField egt_inverse(const AnalyticField& field, const PhysicalParams& params);
WaveField egt_inverse(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target);

/// psi'(xi, tau) = exp(-i (qE0)^2 tau^3 / (6 m hbar)) psi''(xi, tau).
/// Input must be AcceleratedFrame with the canonical trajectory; output FreeFrame.
AnalyticField to_free_frame(const AnalyticField& field, const PhysicalParams& params,
                            const PhaseCoefficients& coefficients = {});
WaveField to_free_frame(const WaveField& wf, const PhysicalParams& params,
                        const PhaseCoefficients& coefficients = {});

/// psi'(x - eta(t), t) as a lab-frame field: the free equation rewritten in
/// (x, t) with the drift term -i hbar eta_dot d/dx. Output MovingFreeFrame{canonical}.
AnalyticField to_lab_coordinates(const AnalyticField& field, const PhysicalParams& params);

/// psi~(x, t) = exp(-i (qE0)^2 t^3 / (6 m hbar)) psi'(x - eta(t), t) with the
/// canonical eta. Input FreeFrame; output dynamic gauge, inertial.
AnalyticField egt_backward_to_dynamic(const AnalyticField& field, const PhysicalParams& params,
                                      const PhaseCoefficients& coefficients = {});
WaveField egt_backward_to_dynamic(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target,
                                  const PhaseCoefficients& coefficients = {});

/// psi(x, t) = exp(-i f(x, t) / hbar) psi'(x - eta(t), t) with the backward
/// phase f(x, t) = (qE0)^2 t^3 / (6m) - x qE0 t. Input FreeFrame; output static gauge.
AnalyticField egt_backward_to_static(const AnalyticField& field, const PhysicalParams& params);
WaveField egt_backward_to_static(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target);

/// egt_backward_to_dynamic(to_free_frame(egt_forward(psi, canonical))).
/// Equals gauge_transform(psi, StaticToDynamic) for every static-gauge psi.
AnalyticField double_egt(const AnalyticField& field, const PhysicalParams& params,
                         const PhaseCoefficients& coefficients = {});

/// Interpolation-mode double_egt. The intermediate xi-grid is the source grid
/// translated by -eta(t); the result lives on the source grid.
WaveField double_egt(const WaveField& wf, const PhysicalParams& params, const PhaseCoefficients& coefficients = {});

}  // namespace qgauge
