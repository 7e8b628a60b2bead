#include "dwt/structural.hpp"

#include <cmath>
#include <numbers>

#include "dwt/error.hpp"
#include "dwt/units.hpp"

namespace dwt::structural {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

double secant_argument(const ColumnSpec& col, double modulus, double load) {
    return col.height_l / (2.0 * col.gyration_k) * std::sqrt(load / (col.area_a * modulus));
}

}  // namespace

void BallastSpec::validate() const {
    detail::require(positive(turbine_thrust_n), "turbine thrust must be positive");
    detail::require(positive(nacelle_diameter_m), "nacelle diameter must be positive");
    detail::require(std::isfinite(safety_factor) && safety_factor >= 1.0, "safety factor must be at least 1");
    detail::require(positive(base_diameter_m), "base diameter must be positive");
    detail::require(positive(base_area_m2), "base area must be positive");
    detail::require(positive(ballast_density_kg_m3), "ballast density must be positive");
}

double ballast_required_weight(const BallastSpec& spec) {
    spec.validate();
    return spec.turbine_thrust_n * spec.nacelle_diameter_m * spec.safety_factor / spec.base_diameter_m;
}

double ballast_height_for_weight(double weight_n, const BallastSpec& spec) {
    spec.validate();
    detail::require(positive(weight_n), "ballast weight must be positive");
    return weight_n / (spec.ballast_density_kg_m3 * units::kStandardGravity * spec.base_area_m2);
}

double secant_buckling_load(const ColumnSpec& col, double elastic_modulus) {
    const double r = std::numbers::pi * col.gyration_k / col.height_l;
    return col.area_a * elastic_modulus * r * r;
}

double secant_deflection(const ColumnSpec& col, double elastic_modulus) {
    col.validate();
    detail::require(positive(elastic_modulus), "elastic modulus must be positive");
    if (col.eccentricity_e == 0.0) return 0.0;
    const double arg = std::sqrt(col.load_p / (elastic_modulus * col.moment_i)) * col.height_l / 2.0;
    if (arg >= std::numbers::pi / 2.0) {
        throw NumericError("buckling: secant argument " + std::to_string(arg) + " reaches pi/2");
    }
    return col.eccentricity_e * (1.0 / std::cos(arg) - 1.0);
}

double secant_residual(const ColumnSpec& col, const Material& material, double load_p) {
    const double syc = material.require_yield_strength_compressive();
    const double modulus = material.require_elastic_modulus();
    const double ratio = col.eccentricity_e * col.centroid_c / (col.gyration_k * col.gyration_k);
    const double stress = load_p / col.area_a;
    const double rhs = syc / (1.0 + ratio / std::cos(secant_argument(col, modulus, load_p)));
    return (stress - rhs) / syc;
}

double secant_allowable_load(const ColumnSpec& col, const Material& material) {
    col.validate(false);
    const double syc = material.require_yield_strength_compressive();
    const double modulus = material.require_elastic_modulus();
    const double ratio = col.eccentricity_e * col.centroid_c / (col.gyration_k * col.gyration_k);
    const double p_buckle = secant_buckling_load(col, modulus);

    if (ratio == 0.0) {
        const double p = syc * col.area_a;
        if (p >= p_buckle) {
            throw NumericError("column unstable: squash load exceeds the buckling load");
        }
        return p;
    }

    // g(P) = P/A (1 + ratio sec(arg(P))) - S_yc is strictly increasing on
    // (0, P_buckle), negative at 0 and unbounded at P_buckle.
    auto g = [&](double p) {
        return p / col.area_a * (1.0 + ratio / std::cos(secant_argument(col, modulus, p))) - syc;
    };
    double lo = 0.0;
    double hi = p_buckle;
    for (int iter = 0; iter < 400 && (hi - lo) > 1e-14 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (g(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double p = 0.5 * (lo + hi);
    if (!(p < p_buckle) || !std::isfinite(g(p))) {
        throw NumericError("column unstable: no root below the buckling load");
    }
    return p;
}

void BladeSpec::validate() const {
    detail::require(positive(mass_kg), "blade mass must be positive");
    detail::require(std::isfinite(mount_angle_deg) && mount_angle_deg >= 0.0 && mount_angle_deg <= 90.0,
                    "blade mount angle must lie in [0, 90] degrees");
}

double blade_root_bending_moment(const BladeSpec& blade) {
    blade.validate();
    return blade_root_bending_moment(blade.mass_kg, blade.section.span());
}

double blade_root_bending_moment(double mass_kg, double span_m) {
    detail::require(std::isfinite(mass_kg) && mass_kg >= 0.0, "blade mass must be non-negative");
    detail::require(positive(span_m), "blade span must be positive");
    return mass_kg * units::kStandardGravity * span_m / 2.0;
}

double rect_bending_stress(double moment_nm, const RectSection& s, Orientation orientation) {
    detail::require(std::isfinite(moment_nm) && moment_nm >= 0.0, "bending moment must be non-negative");
    const double b = s.width();
    const double t = s.thickness();
    if (orientation == Orientation::Flat) {
        const double i = b * t * t * t / 12.0;
        return (t / 2.0) * moment_nm / i;
    }
    const double i = t * b * b * b / 12.0;
    return (b / 2.0) * moment_nm / i;
}

double rect_torsion_max_shear(double torque_nm, const RectSection& s) {
    detail::require(std::isfinite(torque_nm) && torque_nm >= 0.0, "torque must be non-negative");
    const double b = s.width();
    const double t = s.thickness();
    return torque_nm * (3.0 + 1.8 * t / b) / (b * t * t);
}

}  // namespace dwt::structural
