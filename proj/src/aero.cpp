#include "dwt/aero.hpp"

#include <cmath>
#include <numbers>

#include "dwt/error.hpp"
#include "dwt/units.hpp"

namespace dwt::aero {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void RotorState::validate() const {
    detail::require(positive(radius_m), "rotor radius must be positive");
    detail::require(std::isfinite(omega_rad_s) && omega_rad_s >= 0.0, "rotor speed must be non-negative");
    detail::require(positive(wind_speed_m_s), "wind speed must be positive");
    detail::require(positive(air_density_kg_m3), "air density must be positive");
    detail::require(positive(power_coefficient) && power_coefficient < 1.0,
                    "power coefficient must lie in (0, 1)");
}

double RotorState::swept_area() const noexcept { return std::numbers::pi * radius_m * radius_m; }

double tip_speed_ratio(const RotorState& state) {
    state.validate();
    return state.radius_m * state.omega_rad_s / state.wind_speed_m_s;
}

double torque_coefficient(double cp, double lambda) {
    detail::require(positive(lambda), "tip speed ratio must be positive (torque coefficient undefined)");
    detail::require(std::isfinite(cp), "power coefficient must be finite");
    return cp / lambda;
}

double rotor_torque(const RotorState& state) {
    const double cq = torque_coefficient(state.power_coefficient, tip_speed_ratio(state));
    const double v = state.wind_speed_m_s;
    return cq * state.air_density_kg_m3 * state.swept_area() * v * v * state.radius_m / 2.0;
}

double rotor_power(double torque_nm, double omega_rad_s) { return torque_nm * omega_rad_s; }

double power_coefficient_from_power(double power_w, const RotorState& state) {
    state.validate();
    const double v = state.wind_speed_m_s;
    return 2.0 * power_w / (state.air_density_kg_m3 * state.swept_area() * v * v * v);
}

double ducted_betz_limit(double a0) {
    detail::require(std::isfinite(a0) && a0 >= 0.0 && a0 <= 1.0, "axial induction factor must lie in [0, 1]");
    return 16.0 / 27.0 * (1.0 - a0);
}

std::vector<SweepRow> torque_sweep(const RotorState& base,
                                   const std::vector<std::pair<double, double>>& cp_rpm) {
    std::vector<SweepRow> rows;
    rows.reserve(cp_rpm.size());
    for (const auto& [cp, rpm] : cp_rpm) {
        RotorState s = base;
        s.power_coefficient = cp;
        s.omega_rad_s = units::to_si(rpm, units::Unit::rpm);
        const double lambda = tip_speed_ratio(s);
        rows.push_back({cp, rpm, lambda, torque_coefficient(cp, lambda), rotor_torque(s)});
    }
    return rows;
}

}  // namespace dwt::aero
