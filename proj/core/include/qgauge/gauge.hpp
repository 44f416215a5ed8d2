#pragma once

#include <string>
#include <variant>

#include "qgauge/trajectory.hpp"

namespace qgauge {

class PhysicalParams;

/// phi = -E0 x, A = 0.
struct StaticGauge {
    bool operator==(const StaticGauge&) const = default;
};

/// phi = 0, qA/c = -qE0 t.
struct DynamicGauge {
    bool operator==(const DynamicGauge&) const = default;
};

/// No potential at all: the free particle seen from the co-accelerating frame.
struct FreeFrame {
    bool operator==(const FreeFrame&) const = default;
};

/// Static-gauge problem seen from the frame xi = x - eta(t):
/// potential -[qE0 (xi + eta) - m xi eta_ddot].
struct AcceleratedFrame {
    FrameTrajectory trajectory;
    bool operator==(const AcceleratedFrame&) const = default;
};

/// Free-frame equation rewritten in lab coordinates x = xi + eta(t):
/// drift term -i hbar eta_dot d/dx and nothing else.
struct MovingFreeFrame {
    FrameTrajectory trajectory;
    bool operator==(const MovingFreeFrame&) const = default;
};

using GaugeSpec = std::variant<StaticGauge, DynamicGauge, FreeFrame, AcceleratedFrame, MovingFreeFrame>;

std::string gauge_name(const GaugeSpec& gauge);

/// Electrostatic potential phi(x) (not multiplied by q). Zero outside the static gauge.
double scalar_potential(const GaugeSpec& gauge, const PhysicalParams& params, double x);

/// A(t)/c. Zero outside the dynamic gauge.
double vector_potential_over_c(const GaugeSpec& gauge, const PhysicalParams& params, double t);

/// Effective vector potential a(t) = qA/c entering -i hbar d/dx - a(t).
double vector_coupling(const GaugeSpec& gauge, const PhysicalParams& params, double t);

}  // namespace qgauge
