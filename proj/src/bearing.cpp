#include "dwt/bearing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dwt/error.hpp"
#include "dwt/units.hpp"

namespace dwt::bearing {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace

void SlewingBearingGeometry::validate() const {
    detail::require(positive(groove_factor_fcm), "groove factor f_cm must be positive");
    detail::require(rows_i >= 1, "bearing must have at least one row");
    detail::require(ball_count_z >= 1, "bearing must have at least one ball");
    detail::require(positive(ball_diameter_mm), "ball diameter must be positive");
    detail::require(std::isfinite(contact_angle_deg) && contact_angle_deg > 0.0 && contact_angle_deg < 90.0,
                    "contact angle must lie in (0, 90) degrees");
    detail::require(std::isfinite(raceway_center_diameter_mm) && raceway_center_diameter_mm > ball_diameter_mm,
                    "raceway diameter must exceed the ball diameter");
}

void BearingLoads::validate() const {
    detail::require(non_negative(radial_n), "radial load must be non-negative");
    detail::require(non_negative(axial_n), "axial load must be non-negative");
    detail::require(non_negative(moment_nm), "overturning moment must be non-negative");
}

void LifeModFactors::validate() const {
    for (double a : {a1, a2, a3, a4}) {
        detail::require(std::isfinite(a) && a > 0.0 && a <= 2.0, "life modification factors must lie in (0, 2]");
    }
}

double basic_dynamic_axial_rating(const SlewingBearingGeometry& g) {
    g.validate();
    const double alpha = deg2rad(g.contact_angle_deg);
    return g.groove_factor_fcm * std::pow(g.rows_i * std::cos(alpha), 0.7) *
           std::pow(static_cast<double>(g.ball_count_z), 2.0 / 3.0) * std::pow(g.ball_diameter_mm, 1.8) *
           std::tan(alpha);
}

double oscillating_rating(double ca, double theta_deg, double p) {
    detail::require(non_negative(ca), "axial rating must be non-negative");
    detail::require(std::isfinite(theta_deg) && theta_deg > 0.0 && theta_deg <= 180.0,
                    "oscillation half-arc must lie in (0, 180] degrees");
    detail::require(std::abs(p - kBallExponent) < 1e-12 || std::abs(p - kRollerExponent) < 1e-12,
                    "life exponent must be 3 (ball) or 10/3 (roller)");
    return ca * std::pow(180.0 / theta_deg, 1.0 / p);
}

double equivalent_axial_load(const BearingLoads& loads, double dm_m) {
    loads.validate();
    detail::require(positive(dm_m), "raceway diameter must be positive");
    return 0.75 * loads.radial_n + loads.axial_n + 2.0 * loads.moment_nm / dm_m;
}

double l10_life(double ca_osc, double pea) {
    detail::require(positive(pea), "equivalent load must be positive");
    detail::require(non_negative(ca_osc), "rating must be non-negative");
    const double r = ca_osc / pea;
    return r * r * r;
}

double modified_life(double l10, const LifeModFactors& f) {
    detail::require(non_negative(l10), "L10 must be non-negative");
    f.validate();
    return f.product() * l10;
}

double raceway_stress_cycles(double lnm, int ball_count_z) {
    detail::require(ball_count_z >= 1, "ball count must be at least 1");
    detail::require(non_negative(lnm), "modified life must be non-negative");
    return lnm * ball_count_z;
}

double bearing_calendar_life(double cycles, double oscillations_per_day) {
    detail::require(positive(oscillations_per_day), "oscillation rate must be positive");
    detail::require(non_negative(cycles), "cycle count must be non-negative");
    return cycles / (oscillations_per_day * units::kDaysPerYear);
}

PipelineResult run_pipeline(const PipelineInput& in) {
    PipelineResult r{};
    r.ca = basic_dynamic_axial_rating(in.geometry);
    r.ca_osc = oscillating_rating(r.ca, in.half_arc_deg, in.life_exponent_p);
    r.pea = equivalent_axial_load(in.loads, in.geometry.raceway_center_diameter_mm * 1e-3);
    r.l10 = l10_life(r.ca_osc, r.pea);
    r.lnm = modified_life(r.l10, in.factors);
    r.raceway_cycles = raceway_stress_cycles(r.lnm, in.geometry.ball_count_z);
    r.years_oscillation_basis = bearing_calendar_life(r.lnm, in.oscillations_per_day);
    r.years_raceway_basis = bearing_calendar_life(r.raceway_cycles, in.oscillations_per_day);
    return r;
}

PipelineResult from_modified_life(double lnm, int ball_count_z, double oscillations_per_day) {
    const double nan = std::nan("");
    PipelineResult r{nan, nan, nan, nan, lnm, 0.0, 0.0, 0.0};
    r.raceway_cycles = raceway_stress_cycles(lnm, ball_count_z);
    r.years_oscillation_basis = bearing_calendar_life(lnm, oscillations_per_day);
    r.years_raceway_basis = bearing_calendar_life(r.raceway_cycles, oscillations_per_day);
    return r;
}

}  // namespace dwt::bearing
