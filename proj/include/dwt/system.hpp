#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dwt/weibull.hpp"

namespace dwt::system {

struct Exponential {
    double rate;  // failures per unit time
};

struct FixedLife {
    double life;
};

using LifeModel = std::variant<Exponential, weibull::WeibullParams, FixedLife>;

void validate(const LifeModel& m);

/// Probability of surviving past t under the model.
double survival(double t, const LifeModel& m);

/// Reliability block diagram with independent components. Series fails at the
/// first child failure; parallel is hot-standby and fails at the last.
class Topology {
public:
    enum class Kind { Leaf, Series, Parallel };

    static Topology leaf(std::string component_id, LifeModel model);
    static Topology series(std::vector<Topology> children);
    static Topology parallel(std::vector<Topology> children);

    Kind kind() const noexcept { return kind_; }
    const std::string& component_id() const noexcept { return id_; }
    const LifeModel& model() const noexcept { return model_; }
    const std::vector<Topology>& children() const noexcept { return children_; }

    /// Interior nodes non-empty, leaf models valid, component ids unique.
    void validate() const;

    std::size_t leaf_count() const noexcept;

private:
    Topology() = default;

    Kind kind_ = Kind::Leaf;
    std::string id_;
    LifeModel model_ = Exponential{1.0};
    std::vector<Topology> children_;
};

double series_reliability(std::span<const double> r);
double parallel_reliability(std::span<const double> r);

double system_reliability_at(double t, const Topology& topo);

struct MttfEstimate {
    double estimate;
    double standard_error;
};

/// Sample-mean system failure time. Component draws come from counter-based
/// streams keyed by (seed, leaf index, sample index), so the result is
/// bit-identical for any `threads` value (0 picks hardware concurrency).
MttfEstimate monte_carlo_mttf(const Topology& topo, std::size_t samples, std::uint64_t seed,
                              unsigned threads = 0);

/// Poisson mean for a constant repair rate over a horizon, rate * horizon.
double expected_repairs(double rate, double horizon);

/// exp(-m) m^k / k!, evaluated in log space.
double poisson_pmf(long long k, double mean);

struct ServiceLife {
    double years;
    std::string limiting_component;
};

/// Shortest component life; ties go to the lexicographically first id.
ServiceLife system_service_life(const std::map<std::string, double>& lives);

}  // namespace dwt::system
