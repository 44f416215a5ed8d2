#pragma once

namespace qgauge {

class PhysicalParams;

/// Rectilinear frame displacement eta(t) = a t^2 / 2 + v0 t + x0.
///
/// Only quadratic trajectories are representable, so the action integral
/// \f$\int_0^t \tfrac12 m \dot\eta^2\,dt'\f$ has an exact closed form.
struct FrameTrajectory {
    double a = 0.0;
    double v0 = 0.0;
    double x0 = 0.0;

    /// a = qE0/m, v0 = x0 = 0: the frame co-moving with a classical charge
    /// released from rest.
    static FrameTrajectory canonical(const PhysicalParams& params);

    double eta(double t) const noexcept { return 0.5 * a * t * t + v0 * t + x0; }
    double eta_dot(double t) const noexcept { return a * t + v0; }
    double eta_ddot(double) const noexcept { return a; }

    /// Integral of m * eta_dot^2 / 2 from 0 to t.
    double action_integral(double t, double mass) const noexcept {
        return 0.5 * mass * (a * a * t * t * t / 3.0 + a * v0 * t * t + v0 * v0 * t);
    }

    /// Integral of eta from 0 to t.
    double displacement_integral(double t) const noexcept {
        return a * t * t * t / 6.0 + 0.5 * v0 * t * t + x0 * t;
    }

    FrameTrajectory reversed() const noexcept { return {-a, -v0, -x0}; }

    bool is_canonical(const PhysicalParams& params) const noexcept;

    bool operator==(const FrameTrajectory&) const = default;
};

}  // namespace qgauge
