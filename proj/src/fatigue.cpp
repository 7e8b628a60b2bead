#include "dwt/fatigue.hpp"

#include <cmath>
#include <string>

#include "dwt/error.hpp"
#include "dwt/units.hpp"

namespace dwt::fatigue {
namespace {

void check_factor(double k, const char* label) {
    if (!(std::isfinite(k) && k > 0.0 && k <= 1.5)) {
        throw ValidationError(std::string("Marin factor ") + label + " must lie in (0, 1.5]");
    }
}

}  // namespace

void MarinFactors::validate() const {
    check_factor(ka, "ka");
    check_factor(kb, "kb");
    check_factor(kc, "kc");
    check_factor(kd, "kd");
    check_factor(ke, "ke");
    check_factor(kf, "kf");
}

void SnConstants::validate() const {
    detail::require(std::isfinite(a) && a > 0.0, "S-N coefficient a must be positive");
    detail::require(std::isfinite(b) && b < 0.0, "S-N exponent b must be negative");
    detail::require(std::isfinite(f) && f > 0.0 && f <= 1.0, "fatigue strength fraction must lie in (0, 1]");
}

double SnConstants::low_cycle_knee() const noexcept { return stress_at(1.0e3); }
double SnConstants::endurance_knee() const noexcept { return stress_at(1.0e6); }
double SnConstants::stress_at(double cycles) const noexcept { return a * std::pow(cycles, b); }

double endurance_limit_unmodified(const Material& material) {
    return 0.5 * material.ultimate_tensile_strength();
}

double marin_modified_endurance(double se_prime, const MarinFactors& k) {
    detail::require(std::isfinite(se_prime) && se_prime > 0.0, "unmodified endurance limit must be positive");
    k.validate();
    return k.product() * se_prime;
}

SnConstants sn_constants(double s_ut, double s_e, double f) {
    detail::require(std::isfinite(f) && f > 0.0 && f <= 1.0, "fatigue strength fraction must lie in (0, 1]");
    detail::require(std::isfinite(s_e) && s_e > 0.0, "endurance limit must be positive");
    detail::require(std::isfinite(s_ut) && s_ut > 0.0, "ultimate tensile strength must be positive");
    const double fs = f * s_ut;
    if (!(fs > s_e)) {
        throw ValidationError("f*S_ut must exceed S_e (log10 of their ratio would be non-positive)");
    }
    return {fs * fs / s_e, -std::log10(fs / s_e) / 3.0, f};
}

LifeEstimate cycles_to_failure(double sigma_rev, const SnConstants& c) {
    detail::require(std::isfinite(sigma_rev) && sigma_rev > 0.0, "reversed stress must be positive");
    c.validate();
    const double n = std::pow(sigma_rev / c.a, 1.0 / c.b);
    return {n, sigma_rev < c.endurance_knee(), sigma_rev > c.low_cycle_knee()};
}

double cycles_to_calendar(double cycles, double cycles_per_day) {
    detail::require(std::isfinite(cycles_per_day) && cycles_per_day > 0.0, "cycle rate must be positive");
    detail::require(std::isfinite(cycles) && cycles >= 0.0, "cycle count must be non-negative");
    return cycles / (cycles_per_day * units::kDaysPerYear);
}

}  // namespace dwt::fatigue
