#pragma once

#include <optional>
#include <string>

// Shared domain values. Every quantity is SI (Pa, N, m, kg/m^3); imperial
// units are converted at the boundaries via dwt::units.

namespace dwt {

class Material {
public:
    Material(std::string name, double ultimate_tensile_strength_pa,
             std::optional<double> yield_strength_compressive_pa = std::nullopt,
             std::optional<double> elastic_modulus_pa = std::nullopt,
             std::optional<double> mass_density_kg_m3 = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    double ultimate_tensile_strength() const noexcept { return sut_; }
    const std::optional<double>& yield_strength_compressive() const noexcept { return syc_; }
    const std::optional<double>& elastic_modulus() const noexcept { return e_; }
    const std::optional<double>& mass_density() const noexcept { return rho_; }

    /// Throws ValidationError when the property is absent.
    double require_yield_strength_compressive() const;
    double require_elastic_modulus() const;

private:
    std::string name_;
    double sut_;
    std::optional<double> syc_;
    std::optional<double> e_;
    std::optional<double> rho_;
};

/// Solid rectangle: width b >= thickness t, cantilever span L.
class RectSection {
public:
    RectSection(double width_b_m, double thickness_t_m, double span_l_m);

    double width() const noexcept { return b_; }
    double thickness() const noexcept { return t_; }
    double span() const noexcept { return l_; }

private:
    double b_;
    double t_;
    double l_;
};

/// Eccentrically loaded column. load is ignored by the allowable-load solver.
struct ColumnSpec {
    double load_p;
    double eccentricity_e;
    double centroid_c;
    double gyration_k;
    double height_l;
    double area_a;
    double moment_i;

    /// The allowable-load solver passes require_load = false.
    void validate(bool require_load = true) const;
};

}  // namespace dwt
