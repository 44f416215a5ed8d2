#pragma once

#include <cstddef>
#include <vector>

namespace qgauge {

/// Uniform grid x_min = point(0) < ... < point(n-1) = x_max.
class SpatialGrid {
public:
    static constexpr std::size_t min_points = 8;

    /// Throws InvalidArgument for non-finite bounds, x_max <= x_min or n < 8.
    SpatialGrid(double x_min, double x_max, std::size_t n);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    double dx() const noexcept { return dx_; }

    /// Endpoints are returned exactly; interior points are x_min + i*dx.
    double point(std::size_t i) const noexcept {
        return i + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(i) * dx_;
    }

    std::vector<double> points() const;

    /// Same interval with spacing halved: point(i) here equals refined().point(2i).
    SpatialGrid refined() const { return {x_min_, x_max_, 2 * n_ - 1}; }

    /// Same spacing and size, translated by `offset`.
    SpatialGrid shifted(double offset) const { return {x_min_ + offset, x_max_ + offset, n_}; }

    bool contains(double x) const noexcept { return x >= x_min_ && x <= x_max_; }

    bool operator==(const SpatialGrid&) const = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
};

}  // namespace qgauge
