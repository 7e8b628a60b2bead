#include "dwt/core.hpp"

#include <cmath>
#include <utility>

#include "dwt/error.hpp"

namespace dwt {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_positive(const std::optional<double>& v, const char* what) {
    if (v && !positive(*v)) throw ValidationError(std::string(what) + " must be positive");
}

}  // namespace

Material::Material(std::string name, double ultimate_tensile_strength_pa,
                   std::optional<double> yield_strength_compressive_pa,
                   std::optional<double> elastic_modulus_pa,
                   std::optional<double> mass_density_kg_m3)
    : name_(std::move(name)),
      sut_(ultimate_tensile_strength_pa),
      syc_(yield_strength_compressive_pa),
      e_(elastic_modulus_pa),
      rho_(mass_density_kg_m3) {
    detail::require(positive(sut_), "material '" + name_ + "': ultimate tensile strength must be positive");
    require_positive(syc_, "compressive yield strength");
    require_positive(e_, "elastic modulus");
    require_positive(rho_, "mass density");
    if (syc_ && *syc_ > sut_) {
        throw ValidationError("material '" + name_ +
                              "': compressive yield strength exceeds ultimate tensile strength");
    }
}

double Material::require_yield_strength_compressive() const {
    if (!syc_) throw ValidationError("material '" + name_ + "' has no compressive yield strength");
    return *syc_;
}

double Material::require_elastic_modulus() const {
    if (!e_) throw ValidationError("material '" + name_ + "' has no elastic modulus");
    return *e_;
}

RectSection::RectSection(double width_b_m, double thickness_t_m, double span_l_m)
    : b_(width_b_m), t_(thickness_t_m), l_(span_l_m) {
    detail::require(positive(t_), "section thickness must be positive");
    detail::require(std::isfinite(b_) && b_ >= t_, "section width must be at least its thickness");
    detail::require(positive(l_), "section span must be positive");
}

void ColumnSpec::validate(bool require_load) const {
    if (require_load) detail::require(positive(load_p), "column load must be positive");
    detail::require(std::isfinite(eccentricity_e) && eccentricity_e >= 0.0,
                    "column eccentricity must be non-negative");
    detail::require(positive(centroid_c), "column centroidal distance must be positive");
    detail::require(positive(gyration_k), "column radius of gyration must be positive");
    detail::require(positive(height_l), "column height must be positive");
    detail::require(positive(area_a), "column area must be positive");
    detail::require(positive(moment_i), "column moment of inertia must be positive");
}

}  // namespace dwt
