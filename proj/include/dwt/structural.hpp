#pragma once

#include "dwt/core.hpp"

namespace dwt::structural {

// ---------------------------------------------------------------------------
// Ballasted foundation
// ---------------------------------------------------------------------------

struct BallastSpec {
    double turbine_thrust_n;
    double nacelle_diameter_m;
    double safety_factor;
    double base_diameter_m;
    double base_area_m2;
    double ballast_density_kg_m3;  // mass density; weight uses standard gravity

    void validate() const;
};

/// Moment balance about the base edge: W = T * d_turbine * n / d_base.
double ballast_required_weight(const BallastSpec& spec);

/// Fill height giving weight W over the base area: h = W / (rho * g * A).
double ballast_height_for_weight(double weight_n, const BallastSpec& spec);

// ---------------------------------------------------------------------------
// Eccentric column (secant formula)
// ---------------------------------------------------------------------------

/// Load at which the secant argument reaches pi/2, A*E*(pi*k/l)^2.
double secant_buckling_load(const ColumnSpec& col, double elastic_modulus);

/// Mid-height deflection e * (sec(sqrt(P/(E*I)) * l/2) - 1).
/// Throws NumericError ("buckling") once the argument reaches pi/2.
double secant_deflection(const ColumnSpec& col, double elastic_modulus);

/// Largest load P solving P/A = S_yc / (1 + (e*c/k^2) sec((l/2k) sqrt(P/(A*E)))),
/// found by bisection below the buckling load. col.load_p is ignored.
/// Throws NumericError when no root exists below buckling.
double secant_allowable_load(const ColumnSpec& col, const Material& material);

/// Relative residual of the secant equation at load P; zero at the solution.
double secant_residual(const ColumnSpec& col, const Material& material, double load_p);

// ---------------------------------------------------------------------------
// Rectangular blade section
// ---------------------------------------------------------------------------

struct BladeSpec {
    RectSection section;
    Material material;
    double mount_angle_deg;
    double mass_kg;

    void validate() const;
};

enum class Orientation {
    Flat,     // bending about the wide axis: I = b t^3 / 12, y = t / 2
    Upright,  // bending about the thin axis: I = t b^3 / 12, y = b / 2
};

/// Self-weight root moment of a uniform cantilever, m * g * L / 2.
double blade_root_bending_moment(const BladeSpec& blade);
double blade_root_bending_moment(double mass_kg, double span_m);

double rect_bending_stress(double moment_nm, const RectSection& s, Orientation orientation);

/// Thin-rectangle torsion: tau_max = T (3 + 1.8 t/b) / (b t^2).
double rect_torsion_max_shear(double torque_nm, const RectSection& s);

}  // namespace dwt::structural
