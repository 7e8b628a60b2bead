#include "dwt/weibull.hpp"

#include <cmath>

#include "dwt/error.hpp"
#include "dwt/random.hpp"

namespace dwt::weibull {
namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_time(double t) {
    detail::require(std::isfinite(t) && t >= 0.0, "time must be non-negative");
}

// -ln(1 - p/100), accurate for small p.
double reduced_variate(double percent) { return -std::log1p(-percent / 100.0); }

}  // namespace

void WeibullParams::validate() const {
    detail::require(positive(shape_beta), "Weibull shape must be positive");
    detail::require(positive(scale_eta), "Weibull scale must be positive");
}

void QuantilePoint::validate() const {
    detail::require(std::isfinite(percent_p) && percent_p > 0.0 && percent_p < 100.0,
                    "quantile percent must lie in (0, 100)");
    detail::require(positive(life_bp), "quantile life must be positive");
}

double cdf(double t, const WeibullParams& w) {
    w.validate();
    require_time(t);
    return -std::expm1(-cumulative_hazard(t, w));
}

double survival(double t, const WeibullParams& w) {
    w.validate();
    require_time(t);
    return std::exp(-cumulative_hazard(t, w));
}

double pdf(double t, const WeibullParams& w) {
    w.validate();
    require_time(t);
    if (t == 0.0) {
        if (w.shape_beta < 1.0) return INFINITY;
        return w.shape_beta == 1.0 ? 1.0 / w.scale_eta : 0.0;
    }
    return hazard(t, w) * survival(t, w);
}

double quantile_bp(double percent, const WeibullParams& w) {
    w.validate();
    detail::require(std::isfinite(percent) && percent > 0.0 && percent < 100.0, "percent must lie in (0, 100)");
    return w.scale_eta * std::pow(reduced_variate(percent), 1.0 / w.shape_beta);
}

WeibullParams fit_two_quantiles(const QuantilePoint& q1, const QuantilePoint& q2) {
    q1.validate();
    q2.validate();
    if (q1.percent_p == q2.percent_p) throw ValidationError("quantile percents must differ");
    if (q1.life_bp == q2.life_bp) throw ValidationError("quantile lives must differ");
    if ((q1.percent_p < q2.percent_p) != (q1.life_bp < q2.life_bp)) {
        throw ValidationError("quantile ordering is inconsistent (shape would be non-positive)");
    }
    const double beta = (std::log(reduced_variate(q1.percent_p)) - std::log(reduced_variate(q2.percent_p))) /
                        (std::log(q1.life_bp) - std::log(q2.life_bp));
    const double eta = q1.life_bp / std::pow(reduced_variate(q1.percent_p), 1.0 / beta);
    return {beta, eta};
}

double hazard(double t, const WeibullParams& w) {
    w.validate();
    require_time(t);
    if (t == 0.0 && w.shape_beta < 1.0) {
        throw NumericError("hazard is singular at t = 0 for shape < 1");
    }
    if (t == 0.0) return w.shape_beta == 1.0 ? 1.0 / w.scale_eta : 0.0;
    return w.shape_beta / w.scale_eta * std::pow(t / w.scale_eta, w.shape_beta - 1.0);
}

double cumulative_hazard(double t, const WeibullParams& w) {
    w.validate();
    require_time(t);
    return std::pow(t / w.scale_eta, w.shape_beta);
}

double average_failure_rate(double t1, double t2, const WeibullParams& w) {
    require_time(t1);
    detail::require(std::isfinite(t2) && t1 < t2, "interval must satisfy t1 < t2");
    return (cumulative_hazard(t2, w) - cumulative_hazard(t1, w)) / (t2 - t1);
}

double mean_life(const WeibullParams& w) {
    w.validate();
    return w.scale_eta * std::tgamma(1.0 + 1.0 / w.shape_beta);
}

double inverse_transform(double u, const WeibullParams& w) {
    return w.scale_eta * std::pow(-std::log1p(-u), 1.0 / w.shape_beta);
}

std::vector<double> sample(const WeibullParams& w, std::uint64_t seed, std::size_t count) {
    w.validate();
    detail::require(count >= 1, "sample count must be at least 1");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = inverse_transform(random::uniform(seed, 0, i), w);
    }
    return out;
}

FailureRegime failure_regime(double beta) {
    detail::require(positive(beta), "shape must be positive");
    if (std::abs(beta - 1.0) <= 1e-9) return FailureRegime::Random;
    return beta < 1.0 ? FailureRegime::EarlyLife : FailureRegime::WearOut;
}

std::string_view to_string(FailureRegime r) noexcept {
    switch (r) {
        case FailureRegime::EarlyLife: return "early_life";
        case FailureRegime::Random: return "random";
        case FailureRegime::WearOut: return "wear_out";
    }
    return "unknown";
}

}  // namespace dwt::weibull
