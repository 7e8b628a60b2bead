#pragma once

// Slewing-bearing life: axial rating -> oscillation correction -> equivalent
// axial load -> L10 -> modified life -> raceway stress cycles -> calendar.
//
// Ratings follow the rolling-bearing convention: ball diameter and raceway
// diameter in millimetres, ratings and loads treated as newtons. Moments in
// BearingLoads are N*m and are divided by d_m in metres.

namespace dwt::bearing {

struct SlewingBearingGeometry {
    double groove_factor_fcm;
    int rows_i;
    int ball_count_z;
    double ball_diameter_mm;
    double contact_angle_deg;
    double raceway_center_diameter_mm;

    void validate() const;
};

struct BearingLoads {
    double radial_n = 0.0;
    double axial_n = 0.0;
    double moment_nm = 0.0;

    void validate() const;
    BearingLoads scaled(double s) const noexcept { return {radial_n * s, axial_n * s, moment_nm * s}; }
};

/// ANSI/ABMA modification factors: reliability, material, lubrication,
/// supporting structure. Each in (0, 2].
struct LifeModFactors {
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;
    double a4 = 1.0;

    void validate() const;
    double product() const noexcept { return a1 * a2 * a3 * a4; }

    /// 90% reliability, HRC 58 steel, recommended lubrication factor, tubular tower.
    static LifeModFactors tubular_tower_preset() noexcept { return {1.00, 1.00, 0.10, 0.85}; }
};

inline constexpr double kBallExponent = 3.0;
inline constexpr double kRollerExponent = 10.0 / 3.0;

/// C_a = f_cm (i cos a)^0.7 Z^(2/3) D_r^1.8 tan a.
double basic_dynamic_axial_rating(const SlewingBearingGeometry& g);

/// C_a,osc = C_a (180 / theta)^(1/p); theta is half the oscillation arc in degrees.
double oscillating_rating(double ca, double theta_deg, double p = kBallExponent);

/// P_ea = 0.75 F_r + F_a + 2 M / d_m.
double equivalent_axial_load(const BearingLoads& loads, double dm_m);

/// (C_a,osc / P_ea)^3, counted in the rating's cycle basis (oscillations).
double l10_life(double ca_osc, double pea);

double modified_life(double l10, const LifeModFactors& f);

/// Raceway stress cycles: every ball passes a raceway point once per cycle.
double raceway_stress_cycles(double lnm, int ball_count_z);

/// Years to accumulate `cycles` (oscillations or raceway cycles) at the daily
/// oscillation rate. The pipeline reports both bases side by side.
double bearing_calendar_life(double cycles, double oscillations_per_day);

struct PipelineInput {
    SlewingBearingGeometry geometry;
    BearingLoads loads;
    double half_arc_deg = 30.0;
    double life_exponent_p = kBallExponent;
    LifeModFactors factors = LifeModFactors::tubular_tower_preset();
    double oscillations_per_day = 1500.0;
};

struct PipelineResult {
    double ca;
    double ca_osc;
    double pea;
    double l10;
    double lnm;
    double raceway_cycles;
    double years_oscillation_basis;
    double years_raceway_basis;
};

PipelineResult run_pipeline(const PipelineInput& in);

/// Tail of the pipeline when the modified life is already known.
PipelineResult from_modified_life(double lnm, int ball_count_z, double oscillations_per_day);

}  // namespace dwt::bearing
