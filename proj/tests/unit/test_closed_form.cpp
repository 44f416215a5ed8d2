#include <doctest.h>

#include <cmath>
#include <limits>

#include "qgauge/airy.hpp"
#include "qgauge/errors.hpp"
#include "qgauge/solutions.hpp"
#include "qgauge/transforms.hpp"

using namespace qgauge;

namespace {

const PhysicalParams unit = PhysicalParams::with_field(1.0);

}  // namespace

TEST_CASE("zeta examples") {
    CHECK(zeta(0.0, unit, 0.0) == 0.0);
    const double z1 = zeta(1.0, unit, 0.0);
    CHECK(z1 == doctest::Approx(1.2599210498948732).epsilon(1e-15));
    CHECK(z1 == doctest::Approx(std::exp(std::log(2.0) / 3.0)).epsilon(1e-15));

    const PhysicalParams heavy(2.0, 1.0, 1.0, 1.0);
    const double expected = std::cbrt(4.0) * 1.5;
    CHECK(zeta(1.0, heavy, 0.5) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(zeta(1.0, heavy, 0.5) == doctest::Approx(std::exp(std::log(4.0) / 3.0 + std::log(1.5))).epsilon(1e-15));
}

TEST_CASE("zeta is linear with slope sign(qE0)") {
    for (double field : {2.0, -2.0}) {
        const auto p = PhysicalParams::with_field(field);
        const double slope = zeta(1.0, p, 0.3) - zeta(0.0, p, 0.3);
        CHECK(std::signbit(slope) == std::signbit(field));
        CHECK(zeta(5.0, p, 0.3) - zeta(4.0, p, 0.3) == doctest::Approx(slope).epsilon(1e-13));
    }
    CHECK_THROWS_AS(zeta(1.0, PhysicalParams::with_field(0.0), 0.0), DegenerateField);
    CHECK_THROWS_AS(zeta(1.0, PhysicalParams(1.0, 0.0, 1.0, 1.0), 0.0), DegenerateField);
}

TEST_CASE("eval examples") {
    for (double x : {-4.0, -0.3, 0.0, 2.2}) {
        const complex v = eval({SolutionKind::Psi1Static, 0.7}, x, 0.0, unit);
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == airy_ai(-zeta(x, unit, 0.7)).ai);
    }
    const complex one = eval({SolutionKind::Psi2Static, 0.0, 1.0, Sign::Plus}, 0.0, 0.0, unit);
    CHECK(one.real() == 1.0);
    CHECK(one.imag() == 0.0);
}

TEST_CASE("Psi2 static and dynamic differ by the gauge phase") {
    const SolutionId s{SolutionKind::Psi2Static, 0.0, 0.5}, d{SolutionKind::Psi2Dynamic, 0.0, 0.5};
    const complex ratio = eval(s, 0.7, 1.3, unit) / eval(d, 0.7, 1.3, unit);
    CHECK(std::abs(ratio - std::polar(1.0, 0.91)) < 1e-14);
    CHECK(std::abs(1.0 / ratio - gauge_phase(0.7, 1.3, unit)) < 1e-14);
}

TEST_CASE("Psi1 gauge pair identity") {
    const PhysicalParams p(1.3, 0.8, 1.9, 0.7);
    for (double eps : {-1.0, 0.0, 0.6}) {
        for (double t : {0.0, 0.4, 1.9}) {
            for (double x = -6.0; x <= 4.0; x += 0.173) {
                const complex st = eval({SolutionKind::Psi1Static, eps}, x, t, p);
                const complex dy = eval({SolutionKind::Psi1Dynamic, eps}, x, t, p);
                const complex phase = std::polar(1.0, -t * p.force() * x / p.hbar());
                if (std::abs(st) > 1e-3) {
                    CHECK(std::abs(dy / st - phase) <= 1e-12);
                } else {
                    CHECK(std::abs(st * phase - dy) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("unimodular and stationary moduli") {
    const PhysicalParams p(0.8, 1.2, 0.9, 1.1);
    for (double x = -20.0; x <= 20.0; x += 0.37) {
        for (double t : {0.0, 0.6, 3.1, 10.0}) {
            for (auto sign : {Sign::Plus, Sign::Minus}) {
                CHECK(std::abs(std::abs(eval({SolutionKind::Psi2Static, 0.0, 1.4, sign}, x, t, p)) - 1.0) <= 1e-13);
                CHECK(std::abs(std::abs(eval({SolutionKind::Psi2Dynamic, 0.0, 1.4, sign}, x, t, p)) - 1.0) <= 1e-13);
                CHECK(std::abs(std::abs(eval({SolutionKind::FreePlaneWave, 0.0, 1.4, sign}, x, t, p)) - 1.0) <= 1e-13);
            }
            CHECK(std::abs(eval({SolutionKind::Psi1Static, 0.2}, x, t, p)) ==
                  doctest::Approx(std::abs(eval({SolutionKind::Psi1Static, 0.2}, x, 0.0, p))).epsilon(1e-14));
        }
    }
}

TEST_CASE("sample tags and examples") {
    const SpatialGrid g(-10.0, 5.0, 512);
    const WaveField psi1 = sample({SolutionKind::Psi1Static, 0.4}, g, 0.0, unit);
    CHECK(std::holds_alternative<StaticGauge>(psi1.gauge()));
    CHECK(psi1.frame() == FrameLabel::Inertial);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(psi1[i].imag() == 0.0);
        CHECK(psi1[i] == eval({SolutionKind::Psi1Static, 0.4}, g.point(i), 0.0, unit));
    }

    const WaveField dyn = sample({SolutionKind::Psi2Dynamic, 0.0, 1.0}, g, 1.0, unit);
    CHECK(std::holds_alternative<DynamicGauge>(dyn.gauge()));
    CHECK(dyn.frame() == FrameLabel::Inertial);

    const WaveField wave = sample({SolutionKind::FreePlaneWave, 0.0, 2.3}, g, 0.8, unit);
    CHECK(std::holds_alternative<FreeFrame>(wave.gauge()));
    CHECK(wave.frame() == FrameLabel::Accelerated);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(std::abs(wave[i]) - 1.0) <= 1e-15);

    const PhysicalParams p(1.0, 1.0, 2.0, 1.0);
    const double k = std::cbrt(2.0 * p.mass() * p.force() / (p.hbar() * p.hbar()));
    const WaveField berry = sample({SolutionKind::BerryBalazs}, g, 0.0, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(berry[i].imag() == 0.0);
        CHECK(berry[i].real() == airy_ai(k * g.point(i)).ai);
    }
}

TEST_CASE("accelerating Airy packet keeps its shape") {
    const PhysicalParams p(1.5, 1.0, 0.8, 0.9);
    const double k = std::cbrt(2.0 * p.mass() * p.force() / (p.hbar() * p.hbar()));
    for (double tau : {0.0, 0.5, 1.0, 2.0}) {
        for (double xi = -15.0; xi <= 5.0; xi += 0.05) {
            const double shifted = xi - p.force() * tau * tau / (2.0 * p.mass());
            CHECK(std::abs(std::abs(eval({SolutionKind::BerryBalazs}, xi, tau, p)) - std::abs(airy_ai(k * shifted).ai)) <=
                  1e-12);
        }
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(analytic_field({SolutionKind::Psi1Static}, PhysicalParams::with_field(0.0)), DegenerateField);
    CHECK_THROWS_AS(analytic_field({SolutionKind::Psi1Dynamic}, PhysicalParams::with_field(-1.0)), DegenerateField);
    CHECK_THROWS_AS(analytic_field({SolutionKind::BerryBalazs}, PhysicalParams(1.0, -1.0, 1.0, 1.0)), DegenerateField);
    CHECK_NOTHROW(analytic_field({SolutionKind::Psi2Static, 0.0, 1.0}, PhysicalParams::with_field(0.0)));
    CHECK_NOTHROW(analytic_field({SolutionKind::Psi2Dynamic, 0.0, 1.0}, PhysicalParams::with_field(-1.0)));

    const double nan = std::numeric_limits<double>::quiet_NaN();
    // Unused parameters are ignored but must still be finite.
    CHECK_THROWS_AS(analytic_field({SolutionKind::Psi2Static, nan, 1.0}, unit), InvalidArgument);
    CHECK_THROWS_AS(analytic_field({SolutionKind::Psi1Static, 0.0, nan}, unit), InvalidArgument);
    CHECK_THROWS_AS(eval({SolutionKind::Psi2Static}, nan, 0.0, unit), InvalidArgument);
    CHECK_THROWS_AS(eval({SolutionKind::Psi2Static}, 0.0, std::numeric_limits<double>::infinity(), unit),
                    InvalidArgument);
}

TEST_CASE("solution names round-trip") {
    for (auto kind : {SolutionKind::Psi1Static, SolutionKind::Psi2Static, SolutionKind::Psi1Dynamic,
                      SolutionKind::Psi2Dynamic, SolutionKind::FreePlaneWave, SolutionKind::BerryBalazs}) {
        CHECK(parse_solution_kind(solution_name(kind)) == kind);
    }
    CHECK_FALSE(parse_solution_kind("psi1static").has_value());
    CHECK(uses_airy(SolutionKind::BerryBalazs));
    CHECK_FALSE(uses_airy(SolutionKind::FreePlaneWave));
}

TEST_CASE("superpose") {
    const auto a = analytic_field({SolutionKind::Psi1Static, 0.1}, unit);
    const auto b = analytic_field({SolutionKind::Psi1Static, 0.9}, unit);
    const complex coeffs[] = {{1.0, 0.5}, {-0.3, 2.0}};
    const auto sum = superpose(coeffs, {a, b});
    CHECK(std::abs(sum(0.4, 1.2) - (coeffs[0] * a(0.4, 1.2) + coeffs[1] * b(0.4, 1.2))) <= 1e-15);

    const auto dyn = analytic_field({SolutionKind::Psi1Dynamic, 0.1}, unit);
    CHECK_THROWS_AS(superpose(coeffs, {a, dyn}), TagMismatch);
    CHECK_THROWS_AS(superpose(std::span<const complex>(coeffs, 1), {a, b}), InvalidArgument);
}

TEST_CASE("berry coordinate maps the free-frame Airy image onto the canonical packet") {
    const PhysicalParams p(1.2, 1.0, 0.7, 1.0);
    CHECK(berry_coordinate(2.0, 1.4, p) == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK_THROWS_AS(berry_coordinate(1.0, 0.0, PhysicalParams::with_field(0.0)), DegenerateField);
}
