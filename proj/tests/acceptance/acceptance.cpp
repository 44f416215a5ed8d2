// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qgauge/qgauge.hpp"

using namespace qgauge;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
    o.pass = o.pass && ok;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what + (ok ? "" : " [!]");
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double max_diff(const WaveField& a, const WaveField& b) { return compare_fields(a, b).max_abs_deviation; }

// ---------------------------------------------------------------------------

constexpr double residual_tol = 1e-5;
constexpr double order_tol = 0.2;

Outcome solution_certification() {
    Outcome o;
    const PhysicalParams params(1.3, 0.9, 1.7, 0.8);
    const SpatialGrid grid(-15.0, 5.0, 1024);
    struct Case {
        const char* name;
        AnalyticField field;
        GaugeSpec gauge;
    };
    const auto canonical = FrameTrajectory::canonical(params);
    const std::vector<Case> cases{
        {"Psi1Static", analytic_field({SolutionKind::Psi1Static, 0.5}, params), StaticGauge{}},
        {"Psi2Static", analytic_field({SolutionKind::Psi2Static, 0.0, 0.8}, params), StaticGauge{}},
        {"Psi1Dynamic", analytic_field({SolutionKind::Psi1Dynamic, 0.5}, params), DynamicGauge{}},
        {"Psi2Dynamic", analytic_field({SolutionKind::Psi2Dynamic, 0.0, 0.8, Sign::Minus}, params), DynamicGauge{}},
        {"FreePlaneWave", analytic_field({SolutionKind::FreePlaneWave, 0.0, 0.8}, params), FreeFrame{}},
        {"BerryBalazs", analytic_field({SolutionKind::BerryBalazs}, params), FreeFrame{}},
        {"egt_forward(Psi1Static)",
         egt_forward(analytic_field({SolutionKind::Psi1Static, 0.5}, params), canonical, params),
         AcceleratedFrame{canonical}},
    };
    for (const auto& c : cases) {
        double worst = 0.0, raw = 0.0, order_error = 0.0;
        for (double t : {0.0, 0.7, 1.3}) {
            const ResidualReport r = residual(c.field, c.gauge, grid, t, params, 1e-4);
            worst = std::max(worst, r.linf_residual);
            raw = std::max(raw, r.raw_linf_residual);
            order_error = std::max(order_error, r.convergence_order ? std::abs(*r.convergence_order - 2.0) : HUGE_VAL);
        }
        note(o, worst <= residual_tol && order_error <= order_tol,
             std::string(c.name) + " res=" + num(worst) + " raw=" + num(raw) + " |order-2|=" + num(order_error));
    }
    return o;
}

// ---------------------------------------------------------------------------

constexpr double gauge_pair_tol = 1e-12;

Outcome gauge_pair_law() {
    Outcome o;
    const PhysicalParams params(1.3, 0.9, 1.7, 0.8);
    const SpatialGrid grid(-10.0, 5.0, 512);
    const std::array<std::pair<SolutionKind, SolutionKind>, 2> pairs{
        {{SolutionKind::Psi1Static, SolutionKind::Psi1Dynamic}, {SolutionKind::Psi2Static, SolutionKind::Psi2Dynamic}}};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        double worst = 0.0;
        for (double t : {0.0, 0.5, 1.7}) {
            const WaveField st = sample({pairs[i].first, 0.4, 0.6}, grid, t, params);
            worst = std::max(worst, max_diff(gauge_transform(st, GaugeDirection::StaticToDynamic, params),
                                             sample({pairs[i].second, 0.4, 0.6}, grid, t, params)));
        }
        note(o, worst <= gauge_pair_tol, "psi" + std::to_string(i + 1) + " " + num(worst));
    }
    return o;
}

// ---------------------------------------------------------------------------

constexpr double theorem_tol = 1e-10;

std::vector<std::pair<std::string, AnalyticField>> theorem_fields(const PhysicalParams& params) {
    std::vector<std::pair<std::string, AnalyticField>> fields{
        {"Psi1Static", analytic_field({SolutionKind::Psi1Static, 0.3}, params)},
        {"Psi2Static", analytic_field({SolutionKind::Psi2Static, 0.0, 0.5}, params)},
    };
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> terms(2, 5);
    std::uniform_real_distribution<double> energy(-3.0, 3.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int s = 0; s < 20; ++s) {
        const int n = terms(rng);
        std::vector<double> energies;
        while (static_cast<int>(energies.size()) < n) {
            const double e = energy(rng);
            if (std::none_of(energies.begin(), energies.end(), [&](double x) { return std::abs(x - e) < 0.05; })) {
                energies.push_back(e);
            }
        }
        std::vector<complex> coeffs;
        std::vector<AnalyticField> parts;
        for (double e : energies) {
            coeffs.emplace_back(unit(rng), unit(rng));
            parts.push_back(analytic_field({SolutionKind::Psi1Static, e}, params));
        }
        fields.emplace_back("mix" + std::to_string(s), superpose(coeffs, std::move(parts)));
    }
    return fields;
}

// Largest pointwise |double_egt - gauge_transform| relative to max |reference|.
double theorem_deviation(const PhaseCoefficients& coefficients) {
    const PhysicalParams params(1.3, 0.9, 1.7, 0.8);
    const SpatialGrid grid(-10.0, 5.0, 512);
    double worst = 0.0;
    for (const auto& [name, field] : theorem_fields(params)) {
        const AnalyticField composed = double_egt(field, params, coefficients);
        const AnalyticField gauged = gauge_transform(field, GaugeDirection::StaticToDynamic, params);
        for (double t : {0.5, 1.0, 1.7}) {
            const WaveField reference = gauged.sample(grid, t);
            worst = std::max(worst, max_diff(composed.sample(grid, t), reference) / max_abs(reference));
        }
    }
    return worst;
}

Outcome central_theorem() {
    Outcome o;
    const double d = theorem_deviation({});
    note(o, d <= theorem_tol, "22 fields, max relative deviation " + num(d));
    return o;
}

// ---------------------------------------------------------------------------

constexpr double strange_tol = 1e-12;

Outcome strange_solution() {
    Outcome o;
    const PhysicalParams params(1.3, 0.9, 1.7, 0.8);
    const double m = params.mass(), F = params.force(), hbar = params.hbar();
    const SpatialGrid grid(-10.0, 10.0, 512);
    const double p = 0.6;
    double worst = 0.0;
    for (auto sign : {Sign::Plus, Sign::Minus}) {
        const double sp = sign == Sign::Plus ? p : -p;
        const AnalyticField lab = egt_backward_to_static(analytic_field({SolutionKind::FreePlaneWave, 0.0, p, sign}, params),
                                                         params);
        for (double t : {0.0, 0.5, 1.7}) {
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double x = grid.point(i);
                // psi_2(x, t) written out directly.
                const double phase = -t / (2 * m * hbar) * (p * p + F * F * t * t / 3.0 - 2.0 * F * x * m) +
                                     sp / hbar * (x - F * t * t / (2.0 * m));
                worst = std::max(worst, std::abs(lab(x, t) - std::polar(1.0, phase)));
            }
        }
    }
    note(o, worst <= strange_tol, "max |psi - psi_2| " + num(worst));
    return o;
}

// ---------------------------------------------------------------------------

constexpr double shape_tol = 1e-12;
constexpr double acceleration_rel_tol = 0.01;

// Peak of |psi(., tau)|^2 near `guess`: grid search on a 1e-3 mesh, then a parabola through the top three samples.
double peak_position(const AnalyticField& f, double tau, double guess) {
    const double h = 1e-3;
    double best_x = guess, best = -1.0;
    for (double x = guess - 3.0; x <= guess + 3.0; x += h) {
        const double v = std::norm(f(x, tau));
        if (v > best) best = v, best_x = x;
    }
    const double l = std::norm(f(best_x - h, tau)), c = std::norm(f(best_x, tau)), r = std::norm(f(best_x + h, tau));
    return best_x + 0.5 * h * (l - r) / (l - 2.0 * c + r);
}

Outcome accelerating_packet() {
    Outcome o;
    const PhysicalParams params(1.3, 0.9, 1.7, 0.8);
    const double m = params.mass(), F = params.force();
    const AnalyticField berry = analytic_field({SolutionKind::BerryBalazs}, params);

    double shape = 0.0;
    for (double tau : {0.5, 1.0, 2.0}) {
        for (double xi = -12.0; xi <= 8.0; xi += 0.01) {
            const double now = std::norm(berry(xi, tau));
            const double then = std::norm(berry(xi - F * tau * tau / (2.0 * m), 0.0));
            shape = std::max(shape, std::abs(now - then));
        }
    }
    note(o, shape <= shape_tol, "shape " + num(shape));

    // Least-squares fit x_peak(tau) = c0 + c1 tau + c2 tau^2; acceleration = 2 c2.
    const double start = peak_position(berry, 0.0, 0.0);
    std::vector<double> taus, peaks;
    for (int k = 0; k <= 16; ++k) {
        const double tau = 0.125 * k;
        taus.push_back(tau);
        peaks.push_back(peak_position(berry, tau, peaks.empty() ? start : peaks.back() + 0.25 * F / m * tau));
    }
    double s[5] = {}, b[3] = {};
    for (std::size_t i = 0; i < taus.size(); ++i) {
        double pw = 1.0;
        for (double& v : s) v += pw, pw *= taus[i];
        b[0] += peaks[i], b[1] += peaks[i] * taus[i], b[2] += peaks[i] * taus[i] * taus[i];
    }
    double a[3][4] = {{s[0], s[1], s[2], b[0]}, {s[1], s[2], s[3], b[1]}, {s[2], s[3], s[4], b[2]}};
    for (int k = 0; k < 3; ++k) {
        for (int i = k + 1; i < 3; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
        }
    }
    const double c2 = a[2][3] / a[2][2];
    const double accel = 2.0 * c2;
    const double rel = std::abs(accel / (F / m) - 1.0);
    note(o, rel <= acceleration_rel_tol, "fitted acceleration " + num(accel) + " vs qE0/m " + num(F / m) + " (rel " + num(rel) + ")");
    return o;
}

// ---------------------------------------------------------------------------

constexpr double norm_drift_tol = 1e-10;
constexpr double ehrenfest_tol = 1e-3;
constexpr double canonical_tol = 1e-8;
constexpr double kinetic_tol = 1e-3;

// x'' = qE0 / m by classical RK4.
std::pair<double, double> classical_state(double x0, double p0, double force, double m, double T) {
    const int steps = 1000;
    const double h = T / steps;
    double x = x0, v = p0 / m;
    const double a = force / m;
    for (int i = 0; i < steps; ++i) {
        const double k1x = v, k1v = a;
        const double k2x = v + 0.5 * h * k1v, k2v = a;
        const double k3x = v + 0.5 * h * k2v, k3v = a;
        const double k4x = v + h * k3v, k4v = a;
        x += h / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
        v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    }
    return {x, m * v};
}

Outcome numerical_dynamics() {
    Outcome o;
    {
        const auto params = PhysicalParams::with_field(0.0);
        const WaveField wf = gaussian_packet(SpatialGrid(-30.0, 30.0, 4096), 0.0, 0.0, 2.0, 1.0, FreeFrame{},
                                             FrameLabel::Accelerated);
        const auto r = crank_nicolson_propagate(wf, FreeFrame{}, params, {1e-3, 10000, Boundary::Dirichlet, 100});
        double drift = 0.0;
        for (double n : r.trace.norm) drift = std::max(drift, std::abs(n / r.trace.norm.front() - 1.0));
        note(o, drift <= norm_drift_tol, "norm drift " + num(drift));
    }
    const auto params = PhysicalParams::with_field(0.5);
    const PropagatorConfig cfg{1e-3, 2000, Boundary::Dirichlet, 100};
    const double T = cfg.total_time();
    const WaveField wf = gaussian_packet(SpatialGrid(-30.0, 30.0, 4096), -5.0, 0.0, 1.0, 1.0, StaticGauge{});
    const auto fixed = crank_nicolson_propagate(wf, StaticGauge{}, params, cfg);
    const auto [x_cl, p_cl] = classical_state(-5.0, 0.0, params.force(), params.mass(), T);
    const double ehrenfest = std::abs(fixed.trace.mean_x.back() - x_cl);
    note(o, ehrenfest <= ehrenfest_tol, "Ehrenfest |<x>-x_cl| " + num(ehrenfest));

    const auto dynamic =
        crank_nicolson_propagate(gauge_transform(wf, GaugeDirection::StaticToDynamic, params), DynamicGauge{}, params, cfg);
    double canonical = 0.0;
    for (double p : dynamic.trace.canonical_p) canonical = std::max(canonical, std::abs(p - dynamic.trace.canonical_p[0]));
    note(o, canonical <= canonical_tol, "canonical p drift " + num(canonical));
    const double kinetic = std::abs(dynamic.trace.kinetic_p.back() - dynamic.trace.kinetic_p.front() - p_cl);
    note(o, kinetic <= kinetic_tol, "kinetic p gain error " + num(kinetic));
    return o;
}

// ---------------------------------------------------------------------------

constexpr double cross_gauge_tol = 1e-6;

Outcome cross_gauge() {
    Outcome o;
    const auto params = PhysicalParams::with_field(0.5);
    const SpatialGrid grid(-15.0, 15.0, 8192);
    const PropagatorConfig cfg{1e-3, 1000, Boundary::Dirichlet, 250};
    const WaveField wf = gaussian_packet(grid, 0.0, 0.0, 1.0, 1.0, StaticGauge{});
    std::vector<WaveField> a, b;
    crank_nicolson_propagate(wf, StaticGauge{}, params, cfg, [&](const WaveField& w) { a.push_back(w); });
    crank_nicolson_propagate(gauge_transform(wf, GaugeDirection::StaticToDynamic, params), DynamicGauge{}, params, cfg,
                             [&](const WaveField& w) { b.push_back(w); });
    double worst = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(std::abs(a[s][i]) - std::abs(b[s][i])));
    }
    note(o, a.size() == 5 && worst <= cross_gauge_tol, std::to_string(a.size()) + " snapshots, max ||psi_s|-|psi_d|| " + num(worst));
    return o;
}

// ---------------------------------------------------------------------------

constexpr double airy_oracle_tol = 1e-9;
constexpr double airy_ode_tol = 1e-5;

Outcome special_function() {
    Outcome o;
    double worst = 0.0, ode = 0.0;
    constexpr double h = 5e-4;
    for (int i = 0; i < 200; ++i) {
        const double x = -30.0 + 38.0 * i / 199.0;
        const double ai = airy_ai(x).ai;
        worst = std::max(worst, std::abs(ai - airy_oracle(x, 1e-13)));
        const double second = (airy_ai(x + h).ai - 2.0 * ai + airy_ai(x - h).ai) / (h * h);
        ode = std::max(ode, std::abs(second - x * ai));
    }
    note(o, worst <= airy_oracle_tol, "oracle " + num(worst));
    note(o, ode <= airy_ode_tol, "ODE " + num(ode));
    return o;
}

// ---------------------------------------------------------------------------

// Six orders of magnitude above the theorem tolerance.
constexpr double corrupted_min_deviation = 1e6 * theorem_tol;

Outcome negative_control() {
    Outcome o;
    const double clean = theorem_deviation({});
    const std::array<std::pair<const char*, std::function<void(PhaseCoefficients&)>>, 4> faults{{
        {"action 1/2->2/5", [](PhaseCoefficients& c) { c.action_integral = 0.4; }},
        {"linear 1->0.9", [](PhaseCoefficients& c) { c.action_linear = 0.9; }},
        {"tau^3/6->tau^3/5", [](PhaseCoefficients& c) { c.free_frame_cubic = 1.0 / 5; }},
        {"t^3/6->t^3/5", [](PhaseCoefficients& c) { c.dynamic_cubic = 1.0 / 5; }},
    }};
    for (const auto& [name, corrupt] : faults) {
        PhaseCoefficients c;
        corrupt(c);
        const double d = theorem_deviation(c);
        note(o, d >= corrupted_min_deviation && d > theorem_tol,
             std::string(name) + " " + num(d) + " (x" + num(d / clean) + ")");
    }
    return o;
}

}  // namespace

int main() {
    const std::array<std::pair<const char*, Outcome (*)()>, 9> criteria{{
        {"solution certification", solution_certification},
        {"gauge-pair phase law", gauge_pair_law},
        {"central theorem", central_theorem},
        {"strange solution", strange_solution},
        {"accelerating Airy packet", accelerating_packet},
        {"numerical dynamics", numerical_dynamics},
        {"cross-gauge physics", cross_gauge},
        {"special function", special_function},
        {"negative control", negative_control},
    }};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
