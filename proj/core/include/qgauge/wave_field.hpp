#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"

namespace qgauge {

using complex = std::complex<double>;

enum class FrameLabel { Inertial, Accelerated };

const char* frame_name(FrameLabel frame) noexcept;

/// Complex amplitudes on a uniform grid at one instant, tagged with the
/// equation they claim to satisfy.
class WaveField {
public:
    /// Throws InvalidArgument if the length differs from grid.size() or an
    /// amplitude (or the time) is not finite.
    WaveField(SpatialGrid grid, double time, std::vector<complex> amplitudes, GaugeSpec gauge,
              FrameLabel frame);

    const SpatialGrid& grid() const noexcept { return grid_; }
    double time() const noexcept { return time_; }
    std::span<const complex> amplitudes() const noexcept { return amplitudes_; }
    const complex& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    const GaugeSpec& gauge() const noexcept { return gauge_; }
    FrameLabel frame() const noexcept { return frame_; }

    /// Same grid, time and tags with new amplitudes.
    WaveField with_amplitudes(std::vector<complex> amplitudes) const {
        return {grid_, time_, std::move(amplitudes), gauge_, frame_};
    }

    WaveField retagged(GaugeSpec gauge, FrameLabel frame) const {
        return {grid_, time_, amplitudes_, std::move(gauge), frame};
    }

    WaveField scaled(complex factor) const;

private:
    SpatialGrid grid_;
    double time_;
    std::vector<complex> amplitudes_;
    GaugeSpec gauge_;
    FrameLabel frame_;
};

/// Trapezoid-rule quadrature of a sampled function on a uniform grid.
double trapezoid(std::span<const double> values, double dx);

/// sqrt(integral |psi|^2 dx), trapezoid rule.
double norm(const WaveField& wf);

/// max_i |psi_i|.
double max_abs(const WaveField& wf);

/// max_i |a_i - b_i|; grids must match.
double max_abs_difference(const WaveField& a, const WaveField& b);

}  // namespace qgauge
