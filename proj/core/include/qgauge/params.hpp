#pragma once

namespace qgauge {

/// Physical constants of a charged particle in a uniform field.
///
/// All quantities are dimensionless. Only the combination F = qE0 (together
/// with m and hbar) enters the dynamics; the speed of light is never stored
/// because the dynamic gauge keeps qA/c directly.
class PhysicalParams {
public:
    /// Throws InvalidArgument unless mass > 0, hbar > 0 and every value is finite.
    PhysicalParams(double mass, double charge, double field, double hbar);

    /// m = q = hbar = 1 with the given field magnitude.
    static PhysicalParams with_field(double field) { return {1.0, 1.0, field, 1.0}; }

    double mass() const noexcept { return mass_; }
    double charge() const noexcept { return charge_; }
    double field() const noexcept { return field_; }
    double hbar() const noexcept { return hbar_; }

    /// F = qE0.
    double force() const noexcept { return charge_ * field_; }
    /// qE0 / m, the acceleration of a classical particle in the field.
    double accel() const noexcept { return charge_ * field_ / mass_; }

    PhysicalParams with_field_value(double field) const { return {mass_, charge_, field, hbar_}; }

    bool operator==(const PhysicalParams&) const = default;

private:
    double mass_;
    double charge_;
    double field_;
    double hbar_;
};

}  // namespace qgauge
