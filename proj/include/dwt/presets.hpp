#pragma once

// Scenario values for the reference ducted turbine. These are named inputs,
// not physics: callers override any of them.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dwt/aero.hpp"
#include "dwt/bearing.hpp"
#include "dwt/core.hpp"
#include "dwt/fatigue.hpp"
#include "dwt/structural.hpp"
#include "dwt/units.hpp"

namespace dwt::presets {

inline constexpr double kFatigueStrengthFraction = 0.9;

// Tower: ASTM A36, FEA von Mises stress under the 50-year gust case.
inline constexpr double kTowerSutKsi = 58.0;
inline constexpr double kTowerVonMisesKsi = 13.56;
inline constexpr double kTowerCyclesPerDay = 1000.0;
inline constexpr double kTurbineThrustN = 6035.0;

// Blade: pressed 6061-T6 plate.
inline constexpr double kBladeSutKsi = 45.0;
inline constexpr double kBladeDensityKgM3 = 2700.0;
inline constexpr double kBladeElasticModulusPa = 68.9e9;
inline constexpr double kBladeWidthM = 0.185;
inline constexpr double kBladeThicknessM = 0.004;
inline constexpr double kBladeSpanM = 1.4988;
inline constexpr double kBladeMassKg = 3.0;
inline constexpr double kBladeWorstStressKsi = 6.48;
inline constexpr double kBladeCyclesPerDay = 144000.0;

// Rotor at the extreme-gust condition.
inline constexpr double kRotorRadiusM = 1.5;
inline constexpr double kWindSpeedMS = 48.72;
inline constexpr double kAirDensityKgM3 = 1.24;
inline constexpr double kPowerCoefficient = 0.40;
inline constexpr double kRotorSpeedRpm = 600.0;

// Yaw bearing.
inline constexpr double kHalfArcDeg = 30.0;
inline constexpr double kOscillationsPerDay = 1500.0;
inline constexpr double kModifiedLifeOscillations = 1.49e6;
inline constexpr int kBallCount = 30;

// Controller: early-issue estimate versus CMOS design MTTF, kept side by side.
inline constexpr double kControllerServiceLifeYears = 10.0;
inline constexpr double kControllerDesignMttfYears = 20.0;

inline Material tower_material() {
    return Material("ASTM A36", units::to_si(kTowerSutKsi, units::Unit::ksi),
                    units::to_si(36.0, units::Unit::ksi), 200e9, 7850.0);
}

inline Material blade_material() {
    return Material("Al 6061-T6", units::to_si(kBladeSutKsi, units::Unit::ksi), std::nullopt, kBladeElasticModulusPa,
                    kBladeDensityKgM3);
}

inline RectSection blade_section() { return RectSection(kBladeWidthM, kBladeThicknessM, kBladeSpanM); }

inline structural::BladeSpec blade() { return {blade_section(), blade_material(), 0.0, kBladeMassKg}; }

inline aero::RotorState rotor() {
    return {kRotorRadiusM, units::to_si(kRotorSpeedRpm, units::Unit::rpm), kWindSpeedMS, kAirDensityKgM3,
            kPowerCoefficient};
}

/// (C_p, rpm) combinations of the blade-torque sensitivity study.
inline std::vector<std::pair<double, double>> torque_sweep_points() { return {{0.5, 600.0}, {0.6, 600.0}, {0.4, 900.0}}; }

/// Component lives (years) from the system-life summary.
inline std::map<std::string, double> summary_lives() {
    return {{"tower", 38.0}, {"bearing", 80.0}, {"blades", 75.0}, {"generator", 20.0}, {"slip_ring", 80.0}};
}

}  // namespace dwt::presets
