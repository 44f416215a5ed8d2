#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qgauge/analytic_field.hpp"
#include "qgauge/params.hpp"

namespace qgauge {

/// The closed-form wavefunctions of a charge in a uniform field.
enum class SolutionKind {
    Psi1Static,     ///< exp(-i eps t/hbar) Ai(-zeta), static gauge
    Psi2Static,     ///< non-stationary plane-wave-like solution, static gauge
    Psi1Dynamic,    ///< exp(-i t (eps + qE0 x)/hbar) Ai(-zeta), dynamic gauge
    Psi2Dynamic,    ///< plane-wave-like solution, dynamic gauge
    FreePlaneWave,  ///< exp[i(+-p xi - E_p tau)/hbar] in the co-accelerating frame
    BerryBalazs,    ///< accelerating Airy packet of the free equation
};

enum class Sign { Plus, Minus };

struct SolutionId {
    SolutionKind kind = SolutionKind::Psi1Static;
    double epsilon = 0.0;  ///< energy of the Psi1 family
    double p = 0.0;        ///< momentum of the Psi2 family and the plane wave
    Sign sign = Sign::Plus;
};

std::string_view solution_name(SolutionKind kind) noexcept;
/// Inverse of solution_name; std::nullopt for unknown names.
std::optional<SolutionKind> parse_solution_kind(std::string_view name) noexcept;

/// true for the Airy-based ids (Psi1*, BerryBalazs), which need qE0 > 0.
bool uses_airy(SolutionKind kind) noexcept;

/// Gauge and frame tags a solution is sampled with.
std::pair<GaugeSpec, FrameLabel> solution_tags(SolutionKind kind);

/// zeta = (2m / (q^2 hbar^2 E0^2))^{1/3} (eps + qE0 x). Throws DegenerateField when qE0 = 0.
double zeta(double x, const PhysicalParams& params, double epsilon);

/// Validates `sol` against `params` (finite parameters; qE0 > 0 for Airy ids,
/// otherwise DegenerateField) and returns it as an analytic field.
AnalyticField analytic_field(const SolutionId& sol, const PhysicalParams& params);

/// psi(x, t) for the selected solution. For FreePlaneWave and BerryBalazs x is
/// the accelerated-frame coordinate (xi, resp. xi').
complex eval(const SolutionId& sol, double x, double t, const PhysicalParams& params);

/// eval on every grid point, tagged with solution_tags(sol.kind).
WaveField sample(const SolutionId& sol, const SpatialGrid& grid, double t, const PhysicalParams& params);

/// Origin shift xi' = -xi - eps/(qE0) that carries the free-frame image of
/// Psi1Static (energy eps) onto the canonical BerryBalazs coordinate.
double berry_coordinate(double xi, double epsilon, const PhysicalParams& params);

}  // namespace qgauge
