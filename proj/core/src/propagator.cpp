#include "qgauge/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qgauge/errors.hpp"
#include "qgauge/tridiagonal.hpp"

namespace qgauge {

void PropagatorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("PropagatorConfig: dt must be > 0");
    if (n_steps < 1) throw InvalidArgument("PropagatorConfig: n_steps must be >= 1");
    if (record_every < 1 || record_every > n_steps) {
        throw InvalidArgument("PropagatorConfig: record_every must lie in [1, n_steps]");
    }
}

void ObservableTrace::push(double t, const Observables& o) {
    times.push_back(t);
    norm.push_back(o.norm);
    mean_x.push_back(o.mean_x);
    canonical_p.push_back(o.canonical_p);
    kinetic_p.push_back(o.kinetic_p);
    var_x.push_back(o.var_x);
}

Observables observables(const WaveField& wf, const GaugeSpec& gauge, const PhysicalParams& params,
                        Boundary boundary) {
    const SpatialGrid& grid = wf.grid();
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    const auto psi = wf.amplitudes();
    const double hbar = params.hbar();
    // Periodic grids carry no end points, so every sample gets the full weight.
    auto weight = [&](std::size_t i) {
        return boundary == Boundary::Dirichlet && (i == 0 || i + 1 == n) ? 0.5 * dx : dx;
    };

    double mass = 0.0, first = 0.0, momentum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weight(i);
        const double density = std::norm(psi[i]);
        complex left = i > 0 ? psi[i - 1] : (boundary == Boundary::Periodic ? psi[n - 1] : complex{});
        complex right = i + 1 < n ? psi[i + 1] : (boundary == Boundary::Periodic ? psi[0] : complex{});
        const complex gradient = (right - left) / (2.0 * dx);
        mass += w * density;
        first += w * grid.point(i) * density;
        // Re[conj(psi) (-i hbar) psi'] = hbar Im[conj(psi) psi']
        momentum += w * hbar * std::imag(std::conj(psi[i]) * gradient);
    }
    if (!(mass > 0.0)) throw InvalidArgument("observables: field has zero norm");
    Observables o;
    o.norm = std::sqrt(mass);
    o.mean_x = first / mass;
    double second = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = weight(i);
        const double d = grid.point(i) - o.mean_x;
        second += w * d * d * std::norm(psi[i]);
    }
    o.var_x = second / mass;
    o.canonical_p = momentum / mass;
    o.kinetic_p = o.canonical_p - vector_coupling(gauge, params, wf.time());
    return o;
}

namespace {

bool is_time_independent(const GaugeSpec& gauge) {
    return std::holds_alternative<StaticGauge>(gauge) || std::holds_alternative<FreeFrame>(gauge);
}

// Solves (1 + i alpha H) psi_new = rhs for the chosen boundary.
class CrankNicolsonSystem {
public:
    void factor(const TridiagonalOperator& h, double alpha) {
        const std::size_t n = h.size();
        const complex ia(0.0, alpha);
        lower_.resize(n);
        diag_.resize(n);
        upper_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            lower_[i] = ia * h.lower[i];
            diag_[i] = 1.0 + ia * h.diag[i];
            upper_[i] = ia * h.upper[i];
        }
        periodic_ = h.boundary == Boundary::Periodic;
        if (periodic_) {
            cyclic_.factor(lower_, diag_, upper_);
        } else {
            plain_.factor(lower_, diag_, upper_);
        }
    }

    void solve(std::span<const complex> rhs, std::span<complex> out) const {
        if (periodic_) {
            cyclic_.solve(rhs, out);
        } else {
            plain_.solve(rhs, out);
        }
    }

private:
    std::vector<complex> lower_, diag_, upper_;
    bool periodic_ = false;
    TridiagonalSolver plain_;
    CyclicTridiagonalSolver cyclic_;
};

}  // namespace

PropagationResult crank_nicolson_propagate(const WaveField& wf0, const GaugeSpec& gauge,
                                           const PhysicalParams& params, const PropagatorConfig& config,
                                           const SnapshotCallback& on_record) {
    config.validate();
    if (!(wf0.gauge() == gauge)) {
        throw TagMismatch("crank_nicolson_propagate: field is tagged " + gauge_name(wf0.gauge()) +
                          ", Hamiltonian is " + gauge_name(gauge));
    }
    const SpatialGrid& grid = wf0.grid();
    const std::size_t n = grid.size();
    const double alpha = config.dt / (2.0 * params.hbar());
    const complex ia(0.0, alpha);

    std::vector<complex> psi(wf0.amplitudes().begin(), wf0.amplitudes().end());
    std::vector<complex> rhs(n);
    ObservableTrace trace;
    double max_boundary = 0.0;

    auto record = [&](double t) {
        WaveField snapshot(grid, t, psi, gauge, wf0.frame());
        trace.push(t, observables(snapshot, gauge, params, config.boundary));
        double peak = 0.0;
        for (const auto& v : psi) peak = std::max(peak, std::abs(v));
        if (peak > 0.0) {
            max_boundary = std::max(max_boundary, std::max(std::abs(psi.front()), std::abs(psi.back())) / peak);
        }
        if (on_record) on_record(snapshot);
    };

    const double t0 = wf0.time();
    record(t0);

    CrankNicolsonSystem system;
    TridiagonalOperator h;
    const bool frozen = is_time_independent(gauge);
    auto factor_at = [&](double when, double last_good) {
        h = discretize_hamiltonian(gauge, params, grid, when, config.boundary);
        try {
            system.factor(h, alpha);
        } catch (const SolverBreakdown& e) {
            throw NumericalBreakdown(std::string("crank_nicolson_propagate: ") + e.what(), last_good);
        }
    };
    if (frozen) factor_at(t0, t0);

    double t = t0;
    for (std::size_t step = 1; step <= config.n_steps; ++step) {
        const double t_mid = t0 + (static_cast<double>(step) - 0.5) * config.dt;
        if (!frozen) factor_at(t_mid, t);
        const std::vector<complex> h_psi = h.apply(psi);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = psi[i] - ia * h_psi[i];
        system.solve(rhs, psi);

        double sum = 0.0;
        for (const auto& v : psi) sum += std::norm(v);
        if (!std::isfinite(sum)) {
            throw NumericalBreakdown("crank_nicolson_propagate: non-finite amplitudes at step " +
                                         std::to_string(step),
                                     t);
        }
        t = t0 + static_cast<double>(step) * config.dt;
        if (step % config.record_every == 0 || step == config.n_steps) record(t);
    }

    PropagationResult result{WaveField(grid, t, std::move(psi), gauge, wf0.frame()), std::move(trace),
                             max_boundary, {}};
    if (config.boundary == Boundary::Dirichlet && max_boundary > boundary_warning_level) {
        result.warnings.push_back("boundary amplitude reached " + std::to_string(max_boundary) +
                                  " of the peak; Dirichlet walls may be reflecting the packet");
    }
    return result;
}

WaveField gaussian_packet(const SpatialGrid& grid, double x0, double p0, double sigma, double hbar,
                          GaugeSpec gauge, FrameLabel frame, double t) {
    if (!(sigma > 0.0) || !(hbar > 0.0)) throw InvalidArgument("gaussian_packet: sigma and hbar must be > 0");
    const double amplitude = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    std::vector<complex> psi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double d = grid.point(i) - x0;
        psi[i] = amplitude * std::exp(-d * d / (4.0 * sigma * sigma)) * std::polar(1.0, p0 * grid.point(i) / hbar);
    }
    return WaveField(grid, t, std::move(psi), std::move(gauge), frame);
}

}  // namespace qgauge
