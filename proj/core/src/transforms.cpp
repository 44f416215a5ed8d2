#include "qgauge/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgauge/errors.hpp"
#include "qgauge/interpolation.hpp"

namespace qgauge {

namespace {

void require_tags(const GaugeSpec& gauge, FrameLabel frame, const GaugeSpec& want_gauge, FrameLabel want_frame,
                  const char* op) {
    if (!(gauge == want_gauge) || frame != want_frame) {
        throw TagMismatch(std::string(op) + ": expected " + gauge_name(want_gauge) + "/" + frame_name(want_frame) +
                          " input, got " + gauge_name(gauge) + "/" + frame_name(frame));
    }
}

const FrameTrajectory& accelerated_trajectory(const GaugeSpec& gauge, FrameLabel frame, const char* op) {
    const auto* accelerated = std::get_if<AcceleratedFrame>(&gauge);
    if (accelerated == nullptr || frame != FrameLabel::Accelerated) {
        throw TagMismatch(std::string(op) + ": expected accelerated-frame input, got " + gauge_name(gauge) + "/" +
                          frame_name(frame));
    }
    return accelerated->trajectory;
}

void require_canonical(const FrameTrajectory& trajectory, const PhysicalParams& params, const char* op) {
    if (!trajectory.is_canonical(params)) {
        throw TagMismatch(std::string(op) + ": field was not produced with the canonical trajectory qE0 t^2 / 2m");
    }
}

double signed_gauge_angle(double x, double t, const PhysicalParams& params, GaugeDirection direction) {
    const double angle = -params.force() * t * x / params.hbar();
    return direction == GaugeDirection::StaticToDynamic ? angle : -angle;
}

double cubic_angle(double t, double coefficient, const PhysicalParams& params) {
    const double force = params.force();
    return -coefficient * force * force * t * t * t / (params.mass() * params.hbar());
}

// Samples `source` at x - shift(t) for every target point x, times exp(i angle(x, t)).
template <class Shift, class Angle>
WaveField resample(const WaveField& source, const SpatialGrid& target, Shift shift, Angle angle, GaugeSpec gauge,
                   FrameLabel frame) {
    const double t = source.time();
    const double offset = shift(t);
    std::vector<complex> out(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double x = target.point(i);
        out[i] = std::polar(1.0, angle(x, t)) * interpolate_cubic(source, x - offset);
    }
    return WaveField(target, t, std::move(out), std::move(gauge), frame);
}

template <class Angle>
WaveField multiply_phase(const WaveField& wf, Angle angle, GaugeSpec gauge, FrameLabel frame) {
    std::vector<complex> out(wf.amplitudes().begin(), wf.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= std::polar(1.0, angle(wf.grid().point(i), wf.time()));
    return WaveField(wf.grid(), wf.time(), std::move(out), std::move(gauge), frame);
}

}  // namespace

PhaseMapReport compare_fields(const WaveField& a, const WaveField& b) {
    return {max_abs_difference(a, b), a.size()};
}

double electric_field_of_gauge(const GaugeSpec& gauge, const PhysicalParams& params, double x, double t) {
    if (!std::holds_alternative<StaticGauge>(gauge) && !std::holds_alternative<DynamicGauge>(gauge)) {
        throw InvalidArgument("electric_field_of_gauge: " + gauge_name(gauge) +
                              " is a frame, not an electromagnetic gauge");
    }
    // Both potentials are linear, so a symmetric difference is exact up to rounding.
    const double hx = 0.5 * (1.0 + std::abs(x));
    const double ht = 0.5 * (1.0 + std::abs(t));
    const double dphi_dx =
        (scalar_potential(gauge, params, x + hx) - scalar_potential(gauge, params, x - hx)) / (2.0 * hx);
    const double da_dt =
        (vector_potential_over_c(gauge, params, t + ht) - vector_potential_over_c(gauge, params, t - ht)) /
        (2.0 * ht);
    return -dphi_dx - da_dt;
}

complex gauge_phase(double x, double t, const PhysicalParams& params) {
    return std::polar(1.0, signed_gauge_angle(x, t, params, GaugeDirection::StaticToDynamic));
}

WaveField gauge_transform(const WaveField& wf, GaugeDirection direction, const PhysicalParams& params) {
    const bool forward = direction == GaugeDirection::StaticToDynamic;
    const GaugeSpec source = forward ? GaugeSpec{StaticGauge{}} : GaugeSpec{DynamicGauge{}};
    const GaugeSpec target = forward ? GaugeSpec{DynamicGauge{}} : GaugeSpec{StaticGauge{}};
    require_tags(wf.gauge(), wf.frame(), source, FrameLabel::Inertial, "gauge_transform");
    return multiply_phase(
        wf, [&](double x, double t) { return signed_gauge_angle(x, t, params, direction); }, target,
        FrameLabel::Inertial);
}

AnalyticField gauge_transform(const AnalyticField& field, GaugeDirection direction, const PhysicalParams& params) {
    const bool forward = direction == GaugeDirection::StaticToDynamic;
    const GaugeSpec source = forward ? GaugeSpec{StaticGauge{}} : GaugeSpec{DynamicGauge{}};
    const GaugeSpec target = forward ? GaugeSpec{DynamicGauge{}} : GaugeSpec{StaticGauge{}};
    require_tags(field.gauge(), field.frame(), source, FrameLabel::Inertial, "gauge_transform");
    return AnalyticField(
        [field, params, direction](double x, double t) {
            return std::polar(1.0, signed_gauge_angle(x, t, params, direction)) * field(x, t);
        },
        target, FrameLabel::Inertial);
}

double egt_action_phase(double xi, double tau, const FrameTrajectory& trajectory, const PhysicalParams& params,
                        const PhaseCoefficients& coefficients) {
    const double m = params.mass();
    const double integral = 2.0 * coefficients.action_integral * trajectory.action_integral(tau, m);
    return integral + coefficients.action_linear * m * xi * trajectory.eta_dot(tau);
}

double backward_action_phase(double x, double t, const FrameTrajectory& trajectory, const PhysicalParams& params) {
    const double m = params.mass();
    return trajectory.action_integral(t, m) - m * x * trajectory.eta_dot(t);
}

AnalyticField egt_forward(const AnalyticField& field, const FrameTrajectory& trajectory,
                          const PhysicalParams& params, const PhaseCoefficients& coefficients) {
    require_tags(field.gauge(), field.frame(), StaticGauge{}, FrameLabel::Inertial, "egt_forward");
    return AnalyticField(
        [field, trajectory, params, coefficients](double xi, double tau) {
            const double f = egt_action_phase(xi, tau, trajectory, params, coefficients);
            return std::polar(1.0, -f / params.hbar()) * field(xi + trajectory.eta(tau), tau);
        },
        AcceleratedFrame{trajectory}, FrameLabel::Accelerated);
}

WaveField egt_forward(const WaveField& wf, const FrameTrajectory& trajectory, const PhysicalParams& params,
                      const SpatialGrid& target, const PhaseCoefficients& coefficients) {
    require_tags(wf.gauge(), wf.frame(), StaticGauge{}, FrameLabel::Inertial, "egt_forward");
    return resample(
        wf, target, [&](double t) { return -trajectory.eta(t); },
        [&](double xi, double tau) {
            return -egt_action_phase(xi, tau, trajectory, params, coefficients) / params.hbar();
        },
        AcceleratedFrame{trajectory}, FrameLabel::Accelerated);
}

AnalyticField egt_inverse(const AnalyticField& field, const PhysicalParams& params) {
    const FrameTrajectory trajectory = accelerated_trajectory(field.gauge(), field.frame(), "egt_inverse");
    return AnalyticField(
        [field, trajectory, params](double x, double t) {
            const double xi = x - trajectory.eta(t);
            return std::polar(1.0, egt_action_phase(xi, t, trajectory, params) / params.hbar()) * field(xi, t);
        },
        StaticGauge{}, FrameLabel::Inertial);
}

WaveField egt_inverse(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target) {
    const FrameTrajectory trajectory = accelerated_trajectory(wf.gauge(), wf.frame(), "egt_inverse");
    return resample(
        wf, target, [&](double t) { return trajectory.eta(t); },
        [&](double x, double t) {
            return egt_action_phase(x - trajectory.eta(t), t, trajectory, params) / params.hbar();
        },
        StaticGauge{}, FrameLabel::Inertial);
}

AnalyticField to_free_frame(const AnalyticField& field, const PhysicalParams& params,
                            const PhaseCoefficients& coefficients) {
    require_canonical(accelerated_trajectory(field.gauge(), field.frame(), "to_free_frame"), params,
                      "to_free_frame");
    const double c = coefficients.free_frame_cubic;
    return AnalyticField(
        [field, params, c](double xi, double tau) {
            return std::polar(1.0, cubic_angle(tau, c, params)) * field(xi, tau);
        },
        FreeFrame{}, FrameLabel::Accelerated);
}

WaveField to_free_frame(const WaveField& wf, const PhysicalParams& params, const PhaseCoefficients& coefficients) {
    require_canonical(accelerated_trajectory(wf.gauge(), wf.frame(), "to_free_frame"), params, "to_free_frame");
    const double c = coefficients.free_frame_cubic;
    return multiply_phase(
        wf, [&](double, double tau) { return cubic_angle(tau, c, params); }, FreeFrame{}, FrameLabel::Accelerated);
}

AnalyticField to_lab_coordinates(const AnalyticField& field, const PhysicalParams& params) {
    require_tags(field.gauge(), field.frame(), FreeFrame{}, FrameLabel::Accelerated, "to_lab_coordinates");
    const FrameTrajectory trajectory = FrameTrajectory::canonical(params);
    return AnalyticField([field, trajectory](double x, double t) { return field(x - trajectory.eta(t), t); },
                         MovingFreeFrame{trajectory}, FrameLabel::Inertial);
}

AnalyticField egt_backward_to_dynamic(const AnalyticField& field, const PhysicalParams& params,
                                      const PhaseCoefficients& coefficients) {
    require_tags(field.gauge(), field.frame(), FreeFrame{}, FrameLabel::Accelerated, "egt_backward_to_dynamic");
    const FrameTrajectory trajectory = FrameTrajectory::canonical(params);
    const double c = coefficients.dynamic_cubic;
    return AnalyticField(
        [field, trajectory, params, c](double x, double t) {
            return std::polar(1.0, cubic_angle(t, c, params)) * field(x - trajectory.eta(t), t);
        },
        DynamicGauge{}, FrameLabel::Inertial);
}

WaveField egt_backward_to_dynamic(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target,
                                  const PhaseCoefficients& coefficients) {
    require_tags(wf.gauge(), wf.frame(), FreeFrame{}, FrameLabel::Accelerated, "egt_backward_to_dynamic");
    const FrameTrajectory trajectory = FrameTrajectory::canonical(params);
    const double c = coefficients.dynamic_cubic;
    return resample(
        wf, target, [&](double t) { return trajectory.eta(t); },
        [&](double, double t) { return cubic_angle(t, c, params); }, DynamicGauge{}, FrameLabel::Inertial);
}

AnalyticField egt_backward_to_static(const AnalyticField& field, const PhysicalParams& params) {
    require_tags(field.gauge(), field.frame(), FreeFrame{}, FrameLabel::Accelerated, "egt_backward_to_static");
    const FrameTrajectory trajectory = FrameTrajectory::canonical(params);
    return AnalyticField(
        [field, trajectory, params](double x, double t) {
            const double f = backward_action_phase(x, t, trajectory, params);
            return std::polar(1.0, -f / params.hbar()) * field(x - trajectory.eta(t), t);
        },
        StaticGauge{}, FrameLabel::Inertial);
}

WaveField egt_backward_to_static(const WaveField& wf, const PhysicalParams& params, const SpatialGrid& target) {
    require_tags(wf.gauge(), wf.frame(), FreeFrame{}, FrameLabel::Accelerated, "egt_backward_to_static");
    const FrameTrajectory trajectory = FrameTrajectory::canonical(params);
    return resample(
        wf, target, [&](double t) { return trajectory.eta(t); },
        [&](double x, double t) { return -backward_action_phase(x, t, trajectory, params) / params.hbar(); },
        StaticGauge{}, FrameLabel::Inertial);
}

AnalyticField double_egt(const AnalyticField& field, const PhysicalParams& params,
                         const PhaseCoefficients& coefficients) {
    const FrameTrajectory canonical = FrameTrajectory::canonical(params);
    const AnalyticField accelerated = egt_forward(field, canonical, params, coefficients);
    return egt_backward_to_dynamic(to_free_frame(accelerated, params, coefficients), params, coefficients);
}

WaveField double_egt(const WaveField& wf, const PhysicalParams& params, const PhaseCoefficients& coefficients) {
    const FrameTrajectory canonical = FrameTrajectory::canonical(params);
    const SpatialGrid xi_grid = wf.grid().shifted(-canonical.eta(wf.time()));
    const WaveField accelerated = egt_forward(wf, canonical, params, xi_grid, coefficients);
    return egt_backward_to_dynamic(to_free_frame(accelerated, params, coefficients), params, wf.grid(),
                                   coefficients);
}

}  // namespace qgauge
