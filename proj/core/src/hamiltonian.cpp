#include "qgauge/hamiltonian.hpp"

#include <string>

#include "qgauge/errors.hpp"

namespace qgauge {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
}  // namespace

HamiltonianTerms hamiltonian_terms(const GaugeSpec& gauge, const PhysicalParams& params, double t) {
    HamiltonianTerms terms;
    terms.kinetic = params.hbar() * params.hbar() / (2.0 * params.mass());
    terms.drift = std::visit(
        overloaded{
            // (-i hbar d/dx - a)^2 / 2m contributes -i hbar (-a/m) d/dx.
            [&](const DynamicGauge& g) { return -vector_coupling(g, params, t) / params.mass(); },
            [&](const MovingFreeFrame& g) { return g.trajectory.eta_dot(t); },
            [](const auto&) { return 0.0; },
        },
        gauge);
    return terms;
}

double potential(const GaugeSpec& gauge, const PhysicalParams& params, double x, double t) {
    return std::visit(
        overloaded{
            [&](const StaticGauge& g) { return params.charge() * scalar_potential(g, params, x); },
            [&](const DynamicGauge& g) {
                const double a = vector_coupling(g, params, t);
                return a * a / (2.0 * params.mass());
            },
            [](const FreeFrame&) { return 0.0; },
            [&](const AcceleratedFrame& g) {
                const FrameTrajectory& traj = g.trajectory;
                return -(params.force() * (x + traj.eta(t)) - params.mass() * x * traj.eta_ddot(t));
            },
            [](const MovingFreeFrame&) { return 0.0; },
        },
        gauge);
}

std::vector<complex> TridiagonalOperator::apply(std::span<const complex> psi) const {
    const std::size_t n = size();
    if (psi.size() != n) throw InvalidArgument("TridiagonalOperator::apply: size mismatch");
    std::vector<complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        complex v = diag[i] * psi[i];
        if (i > 0) v += lower[i] * psi[i - 1];
        if (i + 1 < n) v += upper[i] * psi[i + 1];
        out[i] = v;
    }
    if (boundary == Boundary::Periodic) {
        out[0] += lower[0] * psi[n - 1];
        out[n - 1] += upper[n - 1] * psi[0];
    }
    return out;
}

TridiagonalOperator discretize_hamiltonian(const GaugeSpec& gauge, const PhysicalParams& params,
                                           const SpatialGrid& grid, double t, Boundary boundary) {
    const std::size_t n = grid.size();
    const double dx = grid.dx();
    const HamiltonianTerms terms = hamiltonian_terms(gauge, params, t);
    const double hop = -terms.kinetic / (dx * dx);
    // -i hbar b (psi_{i+1} - psi_{i-1}) / 2dx: Hermitian, upper = conj(lower).
    const complex drift(0.0, params.hbar() * terms.drift / (2.0 * dx));
    TridiagonalOperator op;
    op.boundary = boundary;
    op.lower.assign(n, hop + drift);
    op.upper.assign(n, hop - drift);
    op.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        op.diag[i] = 2.0 * terms.kinetic / (dx * dx) + potential(gauge, params, grid.point(i), t);
    }
    if (boundary == Boundary::Dirichlet) {
        op.lower[0] = 0.0;
        op.upper[n - 1] = 0.0;
    }
    return op;
}

std::vector<complex> apply_hamiltonian(const WaveField& wf, const GaugeSpec& gauge, const PhysicalParams& params,
                                       double t, Boundary boundary) {
    if (!(wf.gauge() == gauge)) {
        throw TagMismatch("apply_hamiltonian: field is tagged " + gauge_name(wf.gauge()) + ", Hamiltonian is " +
                          gauge_name(gauge));
    }
    if (t != wf.time()) {
        throw InvalidArgument("apply_hamiltonian: t differs from the field's time stamp");
    }
    return discretize_hamiltonian(gauge, params, wf.grid(), t, boundary).apply(wf.amplitudes());
}

}  // namespace qgauge
