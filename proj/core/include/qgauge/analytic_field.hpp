#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qgauge/gauge.hpp"
#include "qgauge/wave_field.hpp"

namespace qgauge {

/// A wavefunction known in closed form as a function of (position, time),
/// tagged like a WaveField. Transforms applied to it compose exactly
/// ("re-evaluation mode"): shifted coordinates are evaluated, never interpolated.
class AnalyticField {
public:
    using Function = std::function<complex(double x, double t)>;

    AnalyticField(Function fn, GaugeSpec gauge, FrameLabel frame)
        : fn_(std::move(fn)), gauge_(std::move(gauge)), frame_(frame) {}

    complex operator()(double x, double t) const { return fn_(x, t); }

    const GaugeSpec& gauge() const noexcept { return gauge_; }
    FrameLabel frame() const noexcept { return frame_; }

    /// amplitudes[i] = psi(grid.point(i), t). Throws InvalidArgument if any value is non-finite.
    WaveField sample(const SpatialGrid& grid, double t) const;

private:
    Function fn_;
    GaugeSpec gauge_;
    FrameLabel frame_;
};

/// sum_k coefficients[k] * terms[k]. All terms must carry identical tags.
AnalyticField superpose(std::span<const complex> coefficients, std::vector<AnalyticField> terms);

}  // namespace qgauge
