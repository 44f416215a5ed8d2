#include "qgauge/residual.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qgauge/errors.hpp"
#include "qgauge/hamiltonian.hpp"

namespace qgauge {

namespace {

struct RawResidual {
    std::vector<complex> values;  // interior points only
    std::vector<double> scale;    // termwise magnitude
};

RawResidual raw_residual(const AnalyticField& field, const GaugeSpec& gauge, const SpatialGrid& grid, double t,
                         const PhysicalParams& params, double h) {
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    const double hbar = params.hbar();
    const HamiltonianTerms terms = hamiltonian_terms(gauge, params, t);

    std::vector<complex> now(n);
    for (std::size_t i = 0; i < n; ++i) now[i] = field(grid.point(i), t);

    RawResidual out;
    out.values.resize(n - 2);
    out.scale.resize(n - 2);
    const complex i_hbar(0.0, hbar);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double x = grid.point(i);
        const complex time_term = i_hbar * (field(x, t + h) - field(x, t - h)) / (2.0 * h);
        const complex kinetic = -terms.kinetic * (now[i + 1] - 2.0 * now[i] + now[i - 1]) / (dx * dx);
        const complex drift = -i_hbar * terms.drift * (now[i + 1] - now[i - 1]) / (2.0 * dx);
        const complex pot = potential(gauge, params, x, t) * now[i];
        out.values[i - 1] = time_term - (kinetic + drift + pot);
        out.scale[i - 1] = std::abs(time_term) + std::abs(kinetic) + std::abs(drift) + std::abs(pot);
    }
    return out;
}

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

double l2_of(const std::vector<double>& v, double dx) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s * dx);
}

}  // namespace

ResidualReport residual(const AnalyticField& field, const GaugeSpec& gauge, const SpatialGrid& grid, double t,
                        const PhysicalParams& params, double dt_fd) {
    if (!(field.gauge() == gauge)) {
        throw TagMismatch("residual: field is tagged " + gauge_name(field.gauge()) + ", Hamiltonian is " +
                          gauge_name(gauge));
    }
    if (!(dt_fd > 0.0) || !std::isfinite(t)) throw InvalidArgument("residual: need dt_fd > 0 and finite t");

    const RawResidual coarse = raw_residual(field, gauge, grid, t, params, dt_fd);
    const RawResidual fine = raw_residual(field, gauge, grid.refined(), t, params, 0.5 * dt_fd);

    // Fine interior index 2i+1 sits on coarse interior point i.
    const std::size_t m = coarse.values.size();
    std::vector<double> raw(m), fine_on_coarse(m), extrapolated(m);
    for (std::size_t i = 0; i < m; ++i) {
        const complex f = fine.values[2 * i + 1];
        raw[i] = std::abs(coarse.values[i]);
        fine_on_coarse[i] = std::abs(f);
        extrapolated[i] = std::abs((4.0 * f - coarse.values[i]) / 3.0);
    }

    ResidualReport report;
    const double dx = grid.dx();
    report.reference_norm = max_of(coarse.scale);
    const double l2_reference = l2_of(coarse.scale, dx);
    if (!(report.reference_norm > 0.0)) throw InvalidArgument("residual: field vanishes on the grid interior");
    report.raw_linf_residual = max_of(raw) / report.reference_norm;
    report.raw_l2_residual = l2_of(raw, dx) / l2_reference;
    report.linf_residual = max_of(extrapolated) / report.reference_norm;
    report.l2_residual = l2_of(extrapolated, dx) / l2_reference;
    const double coarse_max = max_of(raw);
    const double fine_max = max_of(fine_on_coarse);
    if (coarse_max > 0.0 && fine_max > 0.0) report.convergence_order = std::log2(coarse_max / fine_max);
    return report;
}

bool is_valid_pairing(SolutionKind kind, const GaugeSpec& gauge) noexcept {
    switch (kind) {
        case SolutionKind::Psi1Static:
        case SolutionKind::Psi2Static:
            return std::holds_alternative<StaticGauge>(gauge);
        case SolutionKind::Psi1Dynamic:
        case SolutionKind::Psi2Dynamic:
            return std::holds_alternative<DynamicGauge>(gauge);
        case SolutionKind::FreePlaneWave:
        case SolutionKind::BerryBalazs:
            return std::holds_alternative<FreeFrame>(gauge);
    }
    return false;
}

ResidualReport residual(const SolutionId& sol, const GaugeSpec& gauge, const SpatialGrid& grid, double t,
                        const PhysicalParams& params, double dt_fd) {
    if (!is_valid_pairing(sol.kind, gauge)) {
        throw TagMismatch("residual: " + std::string(solution_name(sol.kind)) + " is not claimed to solve the " +
                          gauge_name(gauge) + " equation");
    }
    return residual(analytic_field(sol, params), gauge, grid, t, params, dt_fd);
}

}  // namespace qgauge
