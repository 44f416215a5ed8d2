#include "qgauge/wave_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgauge/errors.hpp"

namespace qgauge {

const char* frame_name(FrameLabel frame) noexcept {
    return frame == FrameLabel::Inertial ? "inertial" : "accelerated";
}

WaveField::WaveField(SpatialGrid grid, double time, std::vector<complex> amplitudes, GaugeSpec gauge,
                     FrameLabel frame)
    : grid_(grid), time_(time), amplitudes_(std::move(amplitudes)), gauge_(std::move(gauge)), frame_(frame) {
    if (amplitudes_.size() != grid_.size()) {
        throw InvalidArgument("WaveField: " + std::to_string(amplitudes_.size()) + " amplitudes for a " +
                              std::to_string(grid_.size()) + "-point grid");
    }
    if (!std::isfinite(time_)) throw InvalidArgument("WaveField: time must be finite");
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (!std::isfinite(amplitudes_[i].real()) || !std::isfinite(amplitudes_[i].imag())) {
            throw InvalidArgument("WaveField: non-finite amplitude at index " + std::to_string(i));
        }
    }
}

WaveField WaveField::scaled(complex factor) const {
    std::vector<complex> out(amplitudes_);
    for (auto& v : out) v *= factor;
    return with_amplitudes(std::move(out));
}

double trapezoid(std::span<const double> values, double dx) {
    if (values.empty()) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

double norm(const WaveField& wf) {
    std::vector<double> density(wf.size());
    std::transform(wf.amplitudes().begin(), wf.amplitudes().end(), density.begin(),
                   [](const complex& c) { return std::norm(c); });
    return std::sqrt(trapezoid(density, wf.grid().dx()));
}

double max_abs(const WaveField& wf) {
    double m = 0.0;
    for (const auto& c : wf.amplitudes()) m = std::max(m, std::abs(c));
    return m;
}

double max_abs_difference(const WaveField& a, const WaveField& b) {
    if (!(a.grid() == b.grid())) throw InvalidArgument("max_abs_difference: grids differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace qgauge
