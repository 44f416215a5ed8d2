#include "qgauge/solutions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qgauge/airy.hpp"
#include "qgauge/errors.hpp"

namespace qgauge {

namespace {

constexpr std::array<std::pair<SolutionKind, std::string_view>, 6> kind_names{{
    {SolutionKind::Psi1Static, "Psi1Static"},
    {SolutionKind::Psi2Static, "Psi2Static"},
    {SolutionKind::Psi1Dynamic, "Psi1Dynamic"},
    {SolutionKind::Psi2Dynamic, "Psi2Dynamic"},
    {SolutionKind::FreePlaneWave, "FreePlaneWave"},
    {SolutionKind::BerryBalazs, "BerryBalazs"},
}};

double signed_p(const SolutionId& sol) { return sol.sign == Sign::Plus ? sol.p : -sol.p; }

void validate(const SolutionId& sol, const PhysicalParams& params) {
    if (!std::isfinite(sol.epsilon) || !std::isfinite(sol.p)) {
        throw InvalidArgument("solution parameters must be finite");
    }
    if (uses_airy(sol.kind)) {
        const double force = params.force();
        if (force == 0.0) {
            throw DegenerateField(std::string(solution_name(sol.kind)) + " is undefined for qE0 = 0");
        }
        if (force < 0.0) {
            throw DegenerateField(std::string(solution_name(sol.kind)) +
                                  " requires qE0 > 0 (cube-root branch for qE0 < 0 is not defined)");
        }
    }
}

// Unchecked evaluation; callers validate first.
complex evaluate(const SolutionId& sol, double x, double t, const PhysicalParams& params) {
    const double m = params.mass();
    const double hbar = params.hbar();
    const double force = params.force();
    switch (sol.kind) {
        case SolutionKind::Psi1Static: {
            const double ai = airy_ai(-zeta(x, params, sol.epsilon)).ai;
            return ai * std::polar(1.0, -sol.epsilon * t / hbar);
        }
        case SolutionKind::Psi1Dynamic: {
            const double ai = airy_ai(-zeta(x, params, sol.epsilon)).ai;
            return ai * std::polar(1.0, -t * (sol.epsilon + force * x) / hbar);
        }
        case SolutionKind::Psi2Static: {
            const double p = sol.p;
            const double temporal =
                -t * (p * p + force * force * t * t / 3.0 - 2.0 * force * x * m) / (2.0 * m * hbar);
            const double spatial = signed_p(sol) / hbar * (x - force * t * t / (2.0 * m));
            return std::polar(1.0, temporal + spatial);
        }
        case SolutionKind::Psi2Dynamic: {
            const double p = sol.p;
            const double temporal = -t * (p * p + force * force * t * t / 3.0) / (2.0 * m * hbar);
            const double spatial = signed_p(sol) / hbar * (x - force * t * t / (2.0 * m));
            return std::polar(1.0, temporal + spatial);
        }
        case SolutionKind::FreePlaneWave: {
            const double energy = sol.p * sol.p / (2.0 * m);
            return std::polar(1.0, (signed_p(sol) * x - energy * t) / hbar);
        }
        case SolutionKind::BerryBalazs: {
            // Phase written as qE0 tau (xi' - qE0 tau^2 / 3m) / hbar; this is the
            // form that solves the free equation for every qE0 > 0.
            const double scale = std::cbrt(2.0 * m * force / (hbar * hbar));
            const double ai = airy_ai(scale * (x - force * t * t / (2.0 * m))).ai;
            return ai * std::polar(1.0, force * t / hbar * (x - force * t * t / (3.0 * m)));
        }
    }
    throw InvalidArgument("unknown solution kind");
}

}  // namespace

std::string_view solution_name(SolutionKind kind) noexcept {
    for (const auto& [k, name] : kind_names) {
        if (k == kind) return name;
    }
    return "unknown";
}

std::optional<SolutionKind> parse_solution_kind(std::string_view name) noexcept {
    for (const auto& [k, n] : kind_names) {
        if (n == name) return k;
    }
    return std::nullopt;
}

bool uses_airy(SolutionKind kind) noexcept {
    return kind == SolutionKind::Psi1Static || kind == SolutionKind::Psi1Dynamic ||
           kind == SolutionKind::BerryBalazs;
}

std::pair<GaugeSpec, FrameLabel> solution_tags(SolutionKind kind) {
    switch (kind) {
        case SolutionKind::Psi1Static:
        case SolutionKind::Psi2Static:
            return {StaticGauge{}, FrameLabel::Inertial};
        case SolutionKind::Psi1Dynamic:
        case SolutionKind::Psi2Dynamic:
            return {DynamicGauge{}, FrameLabel::Inertial};
        case SolutionKind::FreePlaneWave:
        case SolutionKind::BerryBalazs:
            return {FreeFrame{}, FrameLabel::Accelerated};
    }
    throw InvalidArgument("unknown solution kind");
}

double zeta(double x, const PhysicalParams& params, double epsilon) {
    const double force = params.force();
    if (force == 0.0) throw DegenerateField("zeta is undefined for qE0 = 0");
    const double hbar = params.hbar();
    const double scale = std::cbrt(2.0 * params.mass() / (force * force * hbar * hbar));
    return scale * (epsilon + force * x);
}

AnalyticField analytic_field(const SolutionId& sol, const PhysicalParams& params) {
    validate(sol, params);
    auto [gauge, frame] = solution_tags(sol.kind);
    return AnalyticField([sol, params](double x, double t) { return evaluate(sol, x, t, params); },
                         std::move(gauge), frame);
}

complex eval(const SolutionId& sol, double x, double t, const PhysicalParams& params) {
    validate(sol, params);
    if (!std::isfinite(x) || !std::isfinite(t)) throw InvalidArgument("eval: non-finite (x, t)");
    return evaluate(sol, x, t, params);
}

WaveField sample(const SolutionId& sol, const SpatialGrid& grid, double t, const PhysicalParams& params) {
    return analytic_field(sol, params).sample(grid, t);
}

double berry_coordinate(double xi, double epsilon, const PhysicalParams& params) {
    const double force = params.force();
    if (force == 0.0) throw DegenerateField("berry_coordinate is undefined for qE0 = 0");
    return -xi - epsilon / force;
}

WaveField AnalyticField::sample(const SpatialGrid& grid, double t) const {
    std::vector<complex> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn_(grid.point(i), t);
    return WaveField(grid, t, std::move(values), gauge_, frame_);
}

AnalyticField superpose(std::span<const complex> coefficients, std::vector<AnalyticField> terms) {
    if (terms.empty() || coefficients.size() != terms.size()) {
        throw InvalidArgument("superpose: need one coefficient per term and at least one term");
    }
    for (const auto& term : terms) {
        if (!(term.gauge() == terms.front().gauge()) || term.frame() != terms.front().frame()) {
            throw TagMismatch("superpose: terms carry different gauge/frame tags");
        }
    }
    GaugeSpec gauge = terms.front().gauge();
    const FrameLabel frame = terms.front().frame();
    std::vector<complex> coeffs(coefficients.begin(), coefficients.end());
    return AnalyticField(
        [coeffs = std::move(coeffs), terms = std::move(terms)](double x, double t) {
            complex sum = 0.0;
            for (std::size_t k = 0; k < terms.size(); ++k) sum += coeffs[k] * terms[k](x, t);
            return sum;
        },
        std::move(gauge), frame);
}

}  // namespace qgauge
