#pragma once

#include <utility>
#include <vector>

namespace dwt::aero {

struct RotorState {
    double radius_m;
    double omega_rad_s;
    double wind_speed_m_s;
    double air_density_kg_m3;
    double power_coefficient;

    void validate() const;
    double swept_area() const noexcept;
};

/// lambda = R * omega / V.
double tip_speed_ratio(const RotorState& state);

/// C_q = C_p / lambda.
double torque_coefficient(double cp, double lambda);

/// T = C_q * rho * A * V^2 * R / 2 with A = pi R^2.
double rotor_torque(const RotorState& state);

/// P = T * omega.
double rotor_power(double torque_nm, double omega_rad_s);

/// C_p = 2 P / (rho A V^3); the inverse of the power relation.
double power_coefficient_from_power(double power_w, const RotorState& state);

/// Betz limit shifted by the rotor-plane axial induction a0: 16/27 (1 - a0).
double ducted_betz_limit(double a0);

struct SweepRow {
    double power_coefficient;
    double rotor_speed_rpm;
    double tip_speed_ratio;
    double torque_coefficient;
    double torque_nm;
};

/// Torque for each (C_p, rpm) pair with the remaining state held at `base`.
std::vector<SweepRow> torque_sweep(const RotorState& base,
                                   const std::vector<std::pair<double, double>>& cp_rpm);

}  // namespace dwt::aero
