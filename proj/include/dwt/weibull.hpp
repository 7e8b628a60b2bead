#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace dwt::weibull {

/// Two-parameter Weibull life distribution, F(t) = 1 - exp(-(t/eta)^beta).
struct WeibullParams {
    double shape_beta;
    double scale_eta;

    void validate() const;
};

/// A B_p life: the time at which p percent of the population has failed.
struct QuantilePoint {
    double percent_p;
    double life_bp;

    void validate() const;
};

double cdf(double t, const WeibullParams& w);
double survival(double t, const WeibullParams& w);
double pdf(double t, const WeibullParams& w);

/// B_p = eta (-ln(1 - p/100))^(1/beta).
double quantile_bp(double percent, const WeibullParams& w);

/// Shape from two B-lives (log-log slope), then scale by inverting B_p at q1.
WeibullParams fit_two_quantiles(const QuantilePoint& q1, const QuantilePoint& q2);

/// h(t) = (beta/eta)(t/eta)^(beta-1). Throws NumericError at t = 0 for beta < 1.
double hazard(double t, const WeibullParams& w);

/// H(t) = (t/eta)^beta.
double cumulative_hazard(double t, const WeibullParams& w);

/// Mean hazard over [t1, t2]: (H(t2) - H(t1)) / (t2 - t1).
double average_failure_rate(double t1, double t2, const WeibullParams& w);

/// Mean life, eta * Gamma(1 + 1/beta).
double mean_life(const WeibullParams& w);

/// Inverse-transform draws eta (-ln(1-u))^(1/beta); deterministic per seed.
std::vector<double> sample(const WeibullParams& w, std::uint64_t seed, std::size_t count);

/// Inverse CDF at a single uniform variate.
double inverse_transform(double u, const WeibullParams& w);

enum class FailureRegime { EarlyLife, Random, WearOut };

FailureRegime failure_regime(double beta);
std::string_view to_string(FailureRegime r) noexcept;

}  // namespace dwt::weibull
