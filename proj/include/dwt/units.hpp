#pragma once

#include <string>
#include <string_view>

namespace dwt::units {

// Exact definitions; everything else is derived from these.
inline constexpr double kLbfInNewton = 4.4482216152605;
inline constexpr double kInchInMeter = 0.0254;
inline constexpr double kFootInMeter = 0.3048;
inline constexpr double kMileInMeter = 1609.344;
inline constexpr double kPsiInPascal = kLbfInNewton / (kInchInMeter * kInchInMeter);
inline constexpr double kKsiInPascal = 1000.0 * kPsiInPascal;
inline constexpr double kFootPoundInNewtonMeter = kLbfInNewton * kFootInMeter;

/// Standard gravity [m/s^2], used wherever a weight is derived from a mass.
inline constexpr double kStandardGravity = 9.80665;

inline constexpr double kDaysPerYear = 365.0;

enum class Dimension { Stress, Force, Moment, Length, Density, AngularSpeed, Speed };

enum class Unit {
    Pa,
    MPa,
    ksi,
    N,
    lbf,
    N_m,
    ft_lb,
    m,
    mm,
    in,
    kg_per_m3,
    g_per_cc,
    rpm,
    rad_per_s,
    m_per_s,
    mph,
};

struct Quantity {
    double value = 0.0;
    Unit unit = Unit::Pa;
};

Dimension dimension_of(Unit u) noexcept;

/// Multiplier taking a value in `u` to the SI unit of its dimension.
double si_factor(Unit u) noexcept;

/// Canonical spelling, e.g. "ksi", "N*m", "ft*lb", "kg/m3".
std::string_view name(Unit u) noexcept;
std::string_view name(Dimension d) noexcept;

/// Accepts the canonical spellings plus common aliases ("N-m", "ft-lbs",
/// "g/cc", "rad/s"). Throws ValidationError for unknown spellings.
Unit parse_unit(std::string_view text);

/// Converts between units of the same dimension; throws ValidationError
/// naming both units otherwise.
Quantity convert(const Quantity& q, Unit target);

inline double to_si(double value, Unit u) noexcept { return value * si_factor(u); }
inline double from_si(double value_si, Unit u) noexcept { return value_si / si_factor(u); }

/// Parses "58ksi", "310 MPa", "1.5" (bare numbers take `fallback`). The unit
/// must belong to `fallback`'s dimension.
Quantity parse_quantity(std::string_view text, Unit fallback);

}  // namespace dwt::units
