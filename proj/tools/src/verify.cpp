#include "qgauge_cli/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <fmt/core.h>

#include "qgauge/airy.hpp"
#include "qgauge/errors.hpp"
#include "qgauge/propagator.hpp"
#include "qgauge/residual.hpp"
#include "qgauge/solutions.hpp"

namespace qgauge::cli {

namespace {

using Checks = std::vector<Check>;

void add(Checks& checks, std::string name, double measured, double tolerance) {
    checks.push_back({std::move(name), measured, tolerance, measured <= tolerance});
}

double max_diff(const WaveField& a, const WaveField& b) { return compare_fields(a, b).max_abs_deviation; }

// --- solutions -------------------------------------------------------------

void airy_checks(Checks& checks, const VerifyOptions& options) {
    AiryEvaluator::Constants constants = AiryEvaluator::standard_constants;
    if (options.fault == "airy-constant") constants.gamma_two_thirds = 1.3541;
    const AiryEvaluator airy(constants);

    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = -30.0 + 38.0 * i / 199.0;
        worst = std::max(worst, std::abs(airy(x).ai - airy_oracle(x, 1e-13)));
    }
    add(checks, "airy/oracle-agreement", worst, 1e-9);

    constexpr double h = 1e-3;
    double ode = 0.0;
    for (double x : {-20.0, -10.0, -3.0, -1.0, 0.0, 1.0, 3.0, 8.0}) {
        const double second = (airy(x + h).ai - 2.0 * airy(x).ai + airy(x - h).ai) / (h * h);
        ode = std::max(ode, std::abs(second - x * airy(x).ai));
    }
    add(checks, "airy/ode-identity", ode, 1e-5);
}

void residual_checks(Checks& checks) {
    const auto params = PhysicalParams::with_field(1.0);
    const SpatialGrid grid(-15.0, 5.0, 1024);
    struct Pairing {
        SolutionId id;
        GaugeSpec gauge;
    };
    const std::array<Pairing, 6> pairings{{
        {{SolutionKind::Psi1Static, 0.3}, StaticGauge{}},
        {{SolutionKind::Psi2Static, 0.0, 0.5}, StaticGauge{}},
        {{SolutionKind::Psi1Dynamic, 0.3}, DynamicGauge{}},
        {{SolutionKind::Psi2Dynamic, 0.0, 0.5}, DynamicGauge{}},
        {{SolutionKind::FreePlaneWave, 0.0, 0.5}, FreeFrame{}},
        {{SolutionKind::BerryBalazs}, FreeFrame{}},
    }};
    auto record = [&](const std::string& name, const AnalyticField& field, const GaugeSpec& gauge) {
        double worst = 0.0, order_error = 0.0;
        for (double t : {0.0, 0.7, 1.3}) {
            const ResidualReport r = residual(field, gauge, grid, t, params);
            worst = std::max(worst, r.linf_residual);
            order_error = std::max(order_error, r.convergence_order ? std::abs(*r.convergence_order - 2.0) : HUGE_VAL);
        }
        add(checks, fmt::format("residual/{}", name), worst, 1e-5);
        add(checks, fmt::format("residual-order/{}", name), order_error, 0.2);
    };
    for (const auto& p : pairings) {
        record(std::string(solution_name(p.id.kind)), analytic_field(p.id, params), p.gauge);
    }
    const auto canonical = FrameTrajectory::canonical(params);
    record("AcceleratedPsi1", egt_forward(analytic_field({SolutionKind::Psi1Static, 0.3}, params), canonical, params),
           AcceleratedFrame{canonical});
}

void closed_form_checks(Checks& checks) {
    const auto params = PhysicalParams::with_field(1.0);
    const SpatialGrid grid(-10.0, 5.0, 512);
    const std::array<std::pair<SolutionKind, SolutionKind>, 2> pairs{
        {{SolutionKind::Psi1Static, SolutionKind::Psi1Dynamic}, {SolutionKind::Psi2Static, SolutionKind::Psi2Dynamic}}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        double worst = 0.0;
        for (double t : {0.0, 0.5, 1.7}) {
            const SolutionId s{pairs[i].first, 0.3, 0.5}, d{pairs[i].second, 0.3, 0.5};
            worst = std::max(worst, max_diff(gauge_transform(sample(s, grid, t, params), GaugeDirection::StaticToDynamic,
                                                             params),
                                             sample(d, grid, t, params)));
        }
        add(checks, fmt::format("gauge-pair/psi{}", i + 1), worst, 1e-12);
    }

    double shape = 0.0;
    const double k = std::cbrt(2.0 * params.mass() * params.force() / (params.hbar() * params.hbar()));
    for (double tau : {0.0, 0.5, 1.0, 2.0}) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double xi = grid.point(i);
            const double moving = xi - params.force() * tau * tau / (2.0 * params.mass());
            shape = std::max(shape, std::abs(std::abs(eval({SolutionKind::BerryBalazs}, xi, tau, params)) -
                                             std::abs(airy_ai(k * moving).ai)));
        }
    }
    add(checks, "berry-balazs/shape-invariance", shape, 1e-12);

    double unimodular = 0.0;
    for (auto kind : {SolutionKind::Psi2Static, SolutionKind::Psi2Dynamic}) {
        for (double t : {0.0, 0.9, 2.3}) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                unimodular = std::max(unimodular, std::abs(std::abs(eval({kind, 0.0, 0.8}, grid.point(i), t, params)) - 1.0));
            }
        }
    }
    add(checks, "psi2/unimodular", unimodular, 1e-13);
}

// --- theorem ---------------------------------------------------------------

PhaseCoefficients coefficients_for(const std::string& fault) {
    PhaseCoefficients c;
    if (fault == "action-integral") c.action_integral = 0.4;
    if (fault == "action-linear") c.action_linear = 0.9;
    if (fault == "tau-cubed") c.free_frame_cubic = 1.0 / 5;
    if (fault == "dynamic-cubic") c.dynamic_cubic = 1.0 / 5;
    return c;
}

std::vector<AnalyticField> random_superpositions(const PhysicalParams& params, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> terms(2, 5);
    std::uniform_real_distribution<double> energy(-3.0, 3.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<AnalyticField> fields;
    for (int s = 0; s < count; ++s) {
        const int n = terms(rng);
        std::vector<double> energies;
        while (static_cast<int>(energies.size()) < n) {
            const double e = energy(rng);
            if (std::none_of(energies.begin(), energies.end(), [&](double o) { return std::abs(o - e) < 0.05; })) {
                energies.push_back(e);
            }
        }
        std::vector<complex> coefficients;
        std::vector<AnalyticField> parts;
        for (double e : energies) {
            const double re = unit(rng);
            const double im = unit(rng);
            coefficients.emplace_back(re, im);
            parts.push_back(analytic_field({SolutionKind::Psi1Static, e}, params));
        }
        fields.push_back(superpose(coefficients, std::move(parts)));
    }
    return fields;
}

PhaseMapReport theorem_deviation(const AnalyticField& field, const PhysicalParams& params,
                                 const PhaseCoefficients& coefficients, const SpatialGrid& grid) {
    PhaseMapReport worst;
    const AnalyticField composed = double_egt(field, params, coefficients);
    const AnalyticField gauged = gauge_transform(field, GaugeDirection::StaticToDynamic, params);
    for (double t : {0.5, 1.0, 1.7}) {
        const WaveField reference = gauged.sample(grid, t);
        PhaseMapReport r = compare_fields(composed.sample(grid, t), reference);
        r.max_abs_deviation /= std::max(max_abs(reference), 1e-300);
        worst.max_abs_deviation = std::max(worst.max_abs_deviation, r.max_abs_deviation);
        worst.compared_points += r.compared_points;
    }
    return worst;
}

void theorem_checks(Checks& checks, std::optional<PhaseMapReport>& phase_map, const VerifyOptions& options) {
    const auto params = PhysicalParams::with_field(1.0);
    const SpatialGrid grid(-10.0, 5.0, 512);
    const PhaseCoefficients coefficients = coefficients_for(options.fault);

    PhaseMapReport total;
    auto record = [&](const std::string& name, const AnalyticField& field) {
        const PhaseMapReport r = theorem_deviation(field, params, coefficients, grid);
        total.max_abs_deviation = std::max(total.max_abs_deviation, r.max_abs_deviation);
        total.compared_points += r.compared_points;
        add(checks, "theorem/" + name, r.max_abs_deviation, 1e-10);
    };
    record("Psi1Static", analytic_field({SolutionKind::Psi1Static, 0.3}, params));
    record("Psi2Static", analytic_field({SolutionKind::Psi2Static, 0.0, 0.5}, params));
    const auto mixtures = random_superpositions(params, options.seed, 20);
    for (std::size_t i = 0; i < mixtures.size(); ++i) record(fmt::format("superposition-{:02}", i), mixtures[i]);
    phase_map = total;

    double strange_static = 0.0, strange_dynamic = 0.0;
    for (auto sign : {Sign::Plus, Sign::Minus}) {
        const SolutionId wave{SolutionKind::FreePlaneWave, 0.0, 0.5, sign};
        const AnalyticField free = analytic_field(wave, params);
        for (double t : {0.0, 0.5, 1.7}) {
            strange_static = std::max(
                strange_static, max_diff(egt_backward_to_static(free, params).sample(grid, t),
                                         sample({SolutionKind::Psi2Static, 0.0, 0.5, sign}, grid, t, params)));
            strange_dynamic = std::max(
                strange_dynamic, max_diff(egt_backward_to_dynamic(free, params, coefficients).sample(grid, t),
                                          sample({SolutionKind::Psi2Dynamic, 0.0, 0.5, sign}, grid, t, params)));
        }
    }
    add(checks, "strange-solution/static", strange_static, 1e-12);
    add(checks, "strange-solution/dynamic", strange_dynamic, 1e-12);

    // Free-frame image of the static Airy solution against its closed form in (xi, tau).
    const double eps = 0.3;
    const double force = params.force();
    const double m = params.mass();
    const double hbar = params.hbar();
    const double k = std::cbrt(2.0 * m * force / (hbar * hbar));
    const AnalyticField image = to_free_frame(
        egt_forward(analytic_field({SolutionKind::Psi1Static, eps}, params), FrameTrajectory::canonical(params), params,
                    coefficients),
        params, coefficients);
    double airy_image = 0.0, berry = 0.0;
    for (double tau : {0.0, 0.5, 1.7}) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double xi = grid.point(i);
            const double phase = -tau / hbar * (force * force * tau * tau / (3.0 * m) + force * xi + eps);
            const complex expected =
                airy_ai(-k * (xi + force * tau * tau / (2.0 * m) + eps / force)).ai * std::polar(1.0, phase);
            airy_image = std::max(airy_image, std::abs(image(xi, tau) - expected));
            const double xi_prime = berry_coordinate(xi, eps, params);
            berry = std::max(berry, std::abs(image(xi, tau) - eval({SolutionKind::BerryBalazs}, xi_prime, tau, params)));
        }
    }
    add(checks, "free-frame/psi1-image", airy_image, 1e-12);
    add(checks, "free-frame/berry-balazs", berry, 1e-12);
}

// --- pde -------------------------------------------------------------------

void pde_checks(Checks& checks) {
    {
        const auto params = PhysicalParams::with_field(0.0);
        const SpatialGrid grid(-30.0, 30.0, 4096);
        const WaveField wf = gaussian_packet(grid, 0.0, 0.0, 2.0, params.hbar(), FreeFrame{});
        const auto result = crank_nicolson_propagate(wf, FreeFrame{}, params, {1e-3, 10000, Boundary::Dirichlet, 1000});
        double drift = 0.0, mean_x = 0.0;
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
            drift = std::max(drift, std::abs(result.trace.norm[i] / result.trace.norm[0] - 1.0));
            mean_x = std::max(mean_x, std::abs(result.trace.mean_x[i]));
        }
        add(checks, "crank-nicolson/norm-drift", drift, 1e-10);
        add(checks, "crank-nicolson/free-mean-x", mean_x, 1e-10);
    }

    const auto params = PhysicalParams::with_field(0.5);
    const PropagatorConfig cfg{1e-3, 2000, Boundary::Dirichlet, 100};
    const double T = cfg.total_time();
    {
        const SpatialGrid grid(-30.0, 30.0, 4096);
        const WaveField wf = gaussian_packet(grid, -5.0, 0.0, 1.0, params.hbar(), StaticGauge{});
        const auto fixed = crank_nicolson_propagate(wf, StaticGauge{}, params, cfg);
        const double classical = -5.0 + 0.5 * params.accel() * T * T;
        add(checks, "ehrenfest/static-mean-x", std::abs(fixed.trace.mean_x.back() - classical), 1e-3);

        const WaveField moved = gauge_transform(wf, GaugeDirection::StaticToDynamic, params);
        const auto dynamic = crank_nicolson_propagate(moved, DynamicGauge{}, params, cfg);
        double canonical = 0.0;
        for (double p : dynamic.trace.canonical_p) canonical = std::max(canonical, std::abs(p - dynamic.trace.canonical_p[0]));
        add(checks, "ehrenfest/dynamic-canonical-p", canonical, 1e-8);
        add(checks, "ehrenfest/dynamic-kinetic-p",
            std::abs(dynamic.trace.kinetic_p.back() - dynamic.trace.kinetic_p.front() - params.force() * T), 1e-3);
    }
    {
        const SpatialGrid grid(-15.0, 15.0, 8192);
        const PropagatorConfig cross{1e-3, 1000, Boundary::Dirichlet, 250};
        const WaveField wf = gaussian_packet(grid, 0.0, 0.0, 1.0, params.hbar(), StaticGauge{});
        std::vector<WaveField> fixed_snaps, dynamic_snaps;
        crank_nicolson_propagate(wf, StaticGauge{}, params, cross, [&](const WaveField& w) { fixed_snaps.push_back(w); });
        crank_nicolson_propagate(gauge_transform(wf, GaugeDirection::StaticToDynamic, params), DynamicGauge{}, params,
                                 cross, [&](const WaveField& w) { dynamic_snaps.push_back(w); });
        double worst = 0.0;
        for (std::size_t s = 0; s < fixed_snaps.size(); ++s) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                worst = std::max(worst, std::abs(std::abs(fixed_snaps[s][i]) - std::abs(dynamic_snaps[s][i])));
            }
        }
        add(checks, "cross-gauge/abs-psi", worst, 1e-6);
    }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
    if (name == "solutions") return Suite::Solutions;
    if (name == "theorem") return Suite::Theorem;
    if (name == "pde") return Suite::Pde;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string_view suite_name(Suite suite) noexcept {
    switch (suite) {
        case Suite::Solutions: return "solutions";
        case Suite::Theorem: return "theorem";
        case Suite::Pde: return "pde";
        case Suite::All: return "all";
    }
    return "unknown";
}

const std::vector<std::string>& known_faults() {
    static const std::vector<std::string> faults{"airy-constant", "action-integral", "action-linear", "tau-cubed",
                                                 "dynamic-cubic"};
    return faults;
}

bool VerifyReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
    if (!options.fault.empty() &&
        std::find(known_faults().begin(), known_faults().end(), options.fault) == known_faults().end()) {
        throw InvalidArgument(fmt::format("unknown fault \"{}\"", options.fault));
    }
    VerifyReport report;
    report.suite = std::string(suite_name(suite));
    report.seed = options.seed;
    report.fault = options.fault;
    if (suite == Suite::Solutions || suite == Suite::All) {
        airy_checks(report.checks, options);
        residual_checks(report.checks);
        closed_form_checks(report.checks);
    }
    if (suite == Suite::Theorem || suite == Suite::All) theorem_checks(report.checks, report.phase_map, options);
    if (suite == Suite::Pde || suite == Suite::All) pde_checks(report.checks);
    return report;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    nlohmann::json doc{{"suite", report.suite}, {"seed", report.seed}, {"checks", checks}, {"passed", report.passed()}};
    if (!report.fault.empty()) doc["fault"] = report.fault;
    if (report.phase_map) {
        doc["phase_map_report"] = {{"max_abs_deviation", report.phase_map->max_abs_deviation},
                                   {"compared_points", report.phase_map->compared_points}};
    }
    return doc;
}

}  // namespace qgauge::cli
