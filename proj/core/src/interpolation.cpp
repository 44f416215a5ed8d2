#include "qgauge/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qgauge/errors.hpp"

namespace qgauge {

complex interpolate_cubic(const WaveField& wf, double x) {
    const SpatialGrid& grid = wf.grid();
    const double slack = 1e-9 * grid.dx();
    if (!(x >= grid.x_min() - slack && x <= grid.x_max() + slack)) {
        throw OutOfDomain("interpolate_cubic: x = " + std::to_string(x) + " outside [" +
                          std::to_string(grid.x_min()) + ", " + std::to_string(grid.x_max()) + "]");
    }
    const double u = (x - grid.x_min()) / grid.dx();
    const auto n = static_cast<long>(grid.size());
    // Stencil {j-1, j, j+1, j+2} around the cell [j, j+1] holding x.
    long j = static_cast<long>(std::floor(u));
    j = std::clamp(j, 1L, n - 3);
    const double s = u - static_cast<double>(j);  // offset from node j, in cells
    const double w0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
    const double w1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    const double w2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    const double w3 = (s + 1.0) * s * (s - 1.0) / 6.0;
    const auto a = wf.amplitudes();
    return w0 * a[j - 1] + w1 * a[j] + w2 * a[j + 1] + w3 * a[j + 2];
}

}  // namespace qgauge
