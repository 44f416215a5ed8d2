#include <cmath>
#include <string>

#include "qgauge/errors.hpp"
#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"
#include "qgauge/params.hpp"
#include "qgauge/trajectory.hpp"

namespace qgauge {

PhysicalParams::PhysicalParams(double mass, double charge, double field, double hbar)
    : mass_(mass), charge_(charge), field_(field), hbar_(hbar) {
    if (!std::isfinite(mass) || !std::isfinite(charge) || !std::isfinite(field) || !std::isfinite(hbar)) {
        throw InvalidArgument("PhysicalParams: all values must be finite");
    }
    if (!(mass > 0.0)) throw InvalidArgument("PhysicalParams: mass must be > 0");
    if (!(hbar > 0.0)) throw InvalidArgument("PhysicalParams: hbar must be > 0");
    if (!std::isfinite(force()) || !std::isfinite(accel())) {
        throw InvalidArgument("PhysicalParams: qE0 or qE0/m overflows");
    }
}

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw InvalidArgument("SpatialGrid: bounds must be finite");
    }
    if (!(x_max > x_min)) throw InvalidArgument("SpatialGrid: x_max must exceed x_min");
    if (n < min_points) {
        throw InvalidArgument("SpatialGrid: need at least 8 points, got " + std::to_string(n));
    }
    dx_ = (x_max - x_min) / static_cast<double>(n - 1);
    if (!(dx_ > 0.0)) throw InvalidArgument("SpatialGrid: spacing underflows");
}

std::vector<double> SpatialGrid::points() const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = point(i);
    return out;
}

FrameTrajectory FrameTrajectory::canonical(const PhysicalParams& params) {
    return {params.accel(), 0.0, 0.0};
}

bool FrameTrajectory::is_canonical(const PhysicalParams& params) const noexcept {
    const double target = params.accel();
    return v0 == 0.0 && x0 == 0.0 && std::abs(a - target) <= 1e-14 * std::abs(target);
}

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
}  // namespace

std::string gauge_name(const GaugeSpec& gauge) {
    return std::visit(overloaded{
                          [](const StaticGauge&) { return std::string("static"); },
                          [](const DynamicGauge&) { return std::string("dynamic"); },
                          [](const FreeFrame&) { return std::string("free"); },
                          [](const AcceleratedFrame&) { return std::string("accelerated"); },
                          [](const MovingFreeFrame&) { return std::string("moving-free"); },
                      },
                      gauge);
}

double scalar_potential(const GaugeSpec& gauge, const PhysicalParams& params, double x) {
    return std::holds_alternative<StaticGauge>(gauge) ? -params.field() * x : 0.0;
}

double vector_potential_over_c(const GaugeSpec& gauge, const PhysicalParams& params, double t) {
    return std::holds_alternative<DynamicGauge>(gauge) ? -params.field() * t : 0.0;
}

double vector_coupling(const GaugeSpec& gauge, const PhysicalParams& params, double t) {
    return params.charge() * vector_potential_over_c(gauge, params, t);
}

}  // namespace qgauge
