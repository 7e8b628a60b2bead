#pragma once

#include "dwt/core.hpp"

namespace dwt::fatigue {

/// Endurance-limit modification chain: surface, size, load, temperature,
/// reliability, miscellaneous. Each factor lies in (0, 1.5].
struct MarinFactors {
    double ka = 1.0;
    double kb = 1.0;
    double kc = 1.0;
    double kd = 1.0;
    double ke = 1.0;
    double kf = 1.0;

    void validate() const;
    double product() const noexcept { return ka * kb * kc * kd * ke * kf; }

    /// Machined A36 tower in axial loading at 95% reliability.
    static MarinFactors tower_preset() noexcept { return {0.92, 1.00, 0.85, 1.00, 0.87, 1.00}; }
    /// Pressed 6061-T6 blade in bending at 95% reliability.
    static MarinFactors blade_preset() noexcept { return {1.01, 0.89, 1.00, 1.00, 0.87, 1.00}; }
};

/// S-N curve sigma = a * N^b, fitted through (10^3, f*S_ut) and (10^6, S_e).
struct SnConstants {
    double a;  // Pa
    double b;  // negative
    double f;  // fatigue strength fraction

    void validate() const;

    /// Stress at 10^3 cycles, f * S_ut.
    double low_cycle_knee() const noexcept;
    /// Stress at 10^6 cycles, S_e.
    double endurance_knee() const noexcept;
    /// Fully reversed stress amplitude that fails at `cycles`.
    double stress_at(double cycles) const noexcept;
};

struct LifeEstimate {
    double cycles;
    /// sigma' < S_e: the power law was extrapolated past the endurance knee.
    bool below_endurance_extrapolation;
    /// sigma' > f * S_ut: low-cycle regime, outside the fitted range.
    bool low_cycle;
};

/// S_e' = 0.5 S_ut.
double endurance_limit_unmodified(const Material& material);

double marin_modified_endurance(double se_prime, const MarinFactors& k);

/// Throws ValidationError unless f * S_ut > S_e > 0 and f in (0, 1].
SnConstants sn_constants(double s_ut, double s_e, double f);

LifeEstimate cycles_to_failure(double sigma_rev, const SnConstants& c);

/// Calendar years consumed by `cycles` at a constant daily rate (365-day year).
double cycles_to_calendar(double cycles, double cycles_per_day);

}  // namespace dwt::fatigue
