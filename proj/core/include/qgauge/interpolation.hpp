#pragma once

#include "qgauge/wave_field.hpp"

namespace qgauge {

/// Four-point Lagrange interpolation of the amplitudes at x (O(dx^4) error for
/// smooth fields). The stencil is shifted inwards near the ends of the grid.
/// Throws OutOfDomain when x lies outside [x_min, x_max] by more than 1e-9 dx.
complex interpolate_cubic(const WaveField& wf, double x);

}  // namespace qgauge
