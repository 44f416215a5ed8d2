#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "qgauge/errors.hpp"
#include "qgauge/gauge.hpp"
#include "qgauge/grid.hpp"
#include "qgauge/params.hpp"
#include "qgauge/trajectory.hpp"
#include "qgauge/wave_field.hpp"

using namespace qgauge;

TEST_CASE("PhysicalParams validation and derived quantities") {
    const PhysicalParams p(2.0, -1.5, 3.0, 0.5);
    CHECK(p.force() == -4.5);
    CHECK(p.accel() == -2.25);
    CHECK_THROWS_AS(PhysicalParams(0.0, 1.0, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(PhysicalParams(-1.0, 1.0, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(PhysicalParams(1.0, 1.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(PhysicalParams(1.0, std::numeric_limits<double>::quiet_NaN(), 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(PhysicalParams(1.0, 1.0, std::numeric_limits<double>::infinity(), 1.0), InvalidArgument);
    // Finite inputs whose product overflows.
    CHECK_THROWS_AS(PhysicalParams(1.0, 1e200, 1e200, 1.0), InvalidArgument);
    CHECK_THROWS_AS(PhysicalParams(1e-300, 1e10, 1e10, 1.0), InvalidArgument);
    CHECK(PhysicalParams::with_field(2.5) == PhysicalParams(1.0, 1.0, 2.5, 1.0));
}

TEST_CASE("SpatialGrid endpoints are exact") {
    const SpatialGrid g(-0.3, 0.7, 13);
    CHECK(g.point(0) == -0.3);
    CHECK(g.point(12) == 0.7);
    CHECK(g.dx() == doctest::Approx(1.0 / 12).epsilon(1e-15));
    for (std::size_t i = 0; i + 1 < g.size(); ++i) CHECK(g.point(i) == -0.3 + static_cast<double>(i) * g.dx());

    const SpatialGrid fine = g.refined();
    CHECK(fine.size() == 25);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(fine.point(2 * i) == doctest::Approx(g.point(i)).epsilon(1e-15));

    CHECK_THROWS_AS(SpatialGrid(0.0, 1.0, 7), InvalidArgument);
    CHECK_THROWS_AS(SpatialGrid(1.0, 1.0, 16), InvalidArgument);
    CHECK_THROWS_AS(SpatialGrid(2.0, 1.0, 16), InvalidArgument);
    CHECK_THROWS_AS(SpatialGrid(0.0, std::numeric_limits<double>::infinity(), 16), InvalidArgument);
}

TEST_CASE("gauge potentials") {
    const PhysicalParams p(1.0, 2.0, 1.5, 1.0);
    CHECK(scalar_potential(StaticGauge{}, p, 3.0) == -4.5);
    CHECK(vector_potential_over_c(StaticGauge{}, p, 3.0) == 0.0);
    CHECK(scalar_potential(DynamicGauge{}, p, 3.0) == 0.0);
    CHECK(vector_potential_over_c(DynamicGauge{}, p, 2.0) == -3.0);
    CHECK(vector_coupling(DynamicGauge{}, p, 2.0) == -6.0);
    CHECK(vector_coupling(FreeFrame{}, p, 2.0) == 0.0);
    CHECK(gauge_name(AcceleratedFrame{FrameTrajectory::canonical(p)}) == "accelerated");
    CHECK(GaugeSpec{StaticGauge{}} != GaugeSpec{DynamicGauge{}});
    CHECK(GaugeSpec{AcceleratedFrame{{1.0, 0.0, 0.0}}} != GaugeSpec{AcceleratedFrame{{2.0, 0.0, 0.0}}});
}

TEST_CASE("FrameTrajectory closed forms") {
    const PhysicalParams p(2.0, 1.0, 3.0, 1.0);
    const auto canonical = FrameTrajectory::canonical(p);
    CHECK(canonical.a == 1.5);
    CHECK(canonical.v0 == 0.0);
    CHECK(canonical.x0 == 0.0);
    CHECK(canonical.is_canonical(p));
    CHECK_FALSE((FrameTrajectory{1.5, 0.1, 0.0}).is_canonical(p));

    const FrameTrajectory traj{0.7, -0.4, 1.1};
    // The central difference of a quadratic is exact, so eta_dot agrees to rounding.
    for (double t : {-1.0, 0.0, 0.3, 2.5}) {
        for (double h : {1e-1, 1e-2, 1e-3}) {
            CHECK(std::abs((traj.eta(t + h) - traj.eta(t - h)) / (2 * h) - traj.eta_dot(t)) < 1e-11);
        }
    }

    // d/dt action = m eta_dot^2 / 2; the cubic action has a genuine O(h^2) central-difference error.
    const double m = 1.7, t = 1.3;
    auto error = [&](double h) {
        const double fd = (traj.action_integral(t + h, m) - traj.action_integral(t - h, m)) / (2 * h);
        return std::abs(fd - 0.5 * m * traj.eta_dot(t) * traj.eta_dot(t));
    };
    const double slope = std::log2(error(0.02) / error(0.01));
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));

    // Independent check of the action integral by Simpson's rule (exact for cubics).
    const double T = 2.2;
    const auto integrand = [&](double s) { return 0.5 * m * traj.eta_dot(s) * traj.eta_dot(s); };
    const double simpson = T / 6.0 * (integrand(0.0) + 4.0 * integrand(T / 2) + integrand(T));
    CHECK(traj.action_integral(T, m) == doctest::Approx(simpson).epsilon(1e-14));
    const double eta_simpson = T / 6.0 * (traj.eta(0.0) + 4.0 * traj.eta(T / 2) + traj.eta(T));
    CHECK(traj.displacement_integral(T) == doctest::Approx(eta_simpson).epsilon(1e-14));
}

TEST_CASE("WaveField rejects malformed amplitudes") {
    const SpatialGrid g(0.0, 1.0, 8);
    CHECK_THROWS_AS(WaveField(g, 0.0, std::vector<complex>(7), StaticGauge{}, FrameLabel::Inertial), InvalidArgument);
    std::vector<complex> bad(8);
    bad[3] = {std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_THROWS_AS(WaveField(g, 0.0, bad, StaticGauge{}, FrameLabel::Inertial), InvalidArgument);
    bad[3] = {0.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(WaveField(g, 0.0, bad, StaticGauge{}, FrameLabel::Inertial), InvalidArgument);
    CHECK_THROWS_AS(WaveField(g, std::nan(""), std::vector<complex>(8), StaticGauge{}, FrameLabel::Inertial),
                    InvalidArgument);
}

TEST_CASE("norm") {
    SUBCASE("zero field") {
        const SpatialGrid g(-3.0, 4.0, 50);
        CHECK(norm(WaveField(g, 0.0, std::vector<complex>(50), StaticGauge{}, FrameLabel::Inertial)) == 0.0);
    }
    SUBCASE("unit constant on the unit interval") {
        const SpatialGrid g(0.0, 1.0, 101);
        const WaveField wf(g, 0.0, std::vector<complex>(101, 1.0), StaticGauge{}, FrameLabel::Inertial);
        CHECK(std::abs(norm(wf) - 1.0) < 1e-12);
    }
    SUBCASE("normalised Gaussian") {
        const SpatialGrid g(-12.0, 12.0, 2048);
        std::vector<complex> psi(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double x = g.point(i);
            psi[i] = std::exp(-x * x / 2) / std::pow(std::numbers::pi, 0.25);
        }
        const WaveField wf(g, 0.0, psi, StaticGauge{}, FrameLabel::Inertial);
        CHECK(std::abs(norm(wf) - 1.0) < 1e-9);

        const complex c(-0.6, 1.7);
        CHECK(norm(wf.scaled(c)) == doctest::Approx(std::abs(c) * norm(wf)).epsilon(1e-13));
    }
}
