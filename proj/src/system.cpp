#include "dwt/system.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "dwt/error.hpp"
#include "dwt/random.hpp"

namespace dwt::system {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_probabilities(std::span<const double> r) {
    for (double v : r) {
        detail::require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "reliabilities must lie in [0, 1]");
    }
}

double draw(const LifeModel& m, double u) {
    return std::visit(overloaded{
                          [u](const Exponential& e) { return -std::log1p(-u) / e.rate; },
                          [u](const weibull::WeibullParams& w) { return weibull::inverse_transform(u, w); },
                          [](const FixedLife& f) { return f.life; },
                      },
                      m);
}

// Leaves are numbered in depth-first order; the number is the random stream.
double failure_time(const Topology& node, std::uint64_t seed, std::uint64_t sample, std::uint64_t& leaf) {
    if (node.kind() == Topology::Kind::Leaf) {
        return draw(node.model(), random::uniform(seed, leaf++, sample));
    }
    const bool series = node.kind() == Topology::Kind::Series;
    double t = series ? INFINITY : 0.0;
    for (const auto& child : node.children()) {
        const double c = failure_time(child, seed, sample, leaf);
        t = series ? std::min(t, c) : std::max(t, c);
    }
    return t;
}

// Welford accumulator; blocks are merged in index order so that the result is
// independent of scheduling.
struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        n += 1.0;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.n == 0.0) return;
        const double total = n + o.n;
        const double d = o.mean - mean;
        mean += d * o.n / total;
        m2 += o.m2 + d * d * n * o.n / total;
        n = total;
    }
};

void collect_ids(const Topology& node, std::set<std::string>& seen) {
    if (node.kind() == Topology::Kind::Leaf) {
        if (!seen.insert(node.component_id()).second) {
            throw ValidationError("duplicate component id '" + node.component_id() + "' in topology");
        }
        return;
    }
    for (const auto& c : node.children()) collect_ids(c, seen);
}

}  // namespace

void validate(const LifeModel& m) {
    std::visit(overloaded{
                   [](const Exponential& e) {
                       detail::require(std::isfinite(e.rate) && e.rate > 0.0, "exponential rate must be positive");
                   },
                   [](const weibull::WeibullParams& w) { w.validate(); },
                   [](const FixedLife& f) {
                       detail::require(std::isfinite(f.life) && f.life > 0.0, "fixed life must be positive");
                   },
               },
               m);
}

double survival(double t, const LifeModel& m) {
    detail::require(std::isfinite(t) && t >= 0.0, "time must be non-negative");
    return std::visit(overloaded{
                          [t](const Exponential& e) { return std::exp(-e.rate * t); },
                          [t](const weibull::WeibullParams& w) { return weibull::survival(t, w); },
                          [t](const FixedLife& f) { return t < f.life ? 1.0 : 0.0; },
                      },
                      m);
}

Topology Topology::leaf(std::string component_id, LifeModel model) {
    Topology t;
    t.kind_ = Kind::Leaf;
    t.id_ = std::move(component_id);
    t.model_ = model;
    return t;
}

Topology Topology::series(std::vector<Topology> children) {
    Topology t;
    t.kind_ = Kind::Series;
    t.children_ = std::move(children);
    return t;
}

Topology Topology::parallel(std::vector<Topology> children) {
    Topology t;
    t.kind_ = Kind::Parallel;
    t.children_ = std::move(children);
    return t;
}

void Topology::validate() const {
    if (kind_ == Kind::Leaf) {
        detail::require(!id_.empty(), "leaf component id must be non-empty");
        system::validate(model_);
    } else {
        detail::require(!children_.empty(), "series/parallel nodes need at least one child");
        for (const auto& c : children_) c.validate();
    }
    std::set<std::string> seen;
    collect_ids(*this, seen);
}

std::size_t Topology::leaf_count() const noexcept {
    if (kind_ == Kind::Leaf) return 1;
    std::size_t n = 0;
    for (const auto& c : children_) n += c.leaf_count();
    return n;
}

double series_reliability(std::span<const double> r) {
    check_probabilities(r);
    double p = 1.0;
    for (double v : r) p *= v;
    return p;
}

double parallel_reliability(std::span<const double> r) {
    check_probabilities(r);
    double q = 1.0;
    for (double v : r) q *= 1.0 - v;
    return 1.0 - q;
}

double system_reliability_at(double t, const Topology& topo) {
    detail::require(std::isfinite(t) && t >= 0.0, "time must be non-negative");
    if (topo.kind() == Topology::Kind::Leaf) return survival(t, topo.model());
    std::vector<double> r;
    r.reserve(topo.children().size());
    for (const auto& c : topo.children()) r.push_back(system_reliability_at(t, c));
    return topo.kind() == Topology::Kind::Series ? series_reliability(r) : parallel_reliability(r);
}

MttfEstimate monte_carlo_mttf(const Topology& topo, std::size_t samples, std::uint64_t seed, unsigned threads) {
    topo.validate();
    detail::require(samples >= 100, "Monte Carlo needs at least 100 samples");

    constexpr std::size_t kBlock = 1 << 14;
    const std::size_t blocks = (samples + kBlock - 1) / kBlock;
    std::vector<Moments> partial(blocks);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) {
            Moments m;
            const std::size_t end = std::min(samples, (b + 1) * kBlock);
            for (std::size_t i = b * kBlock; i < end; ++i) {
                std::uint64_t leaf = 0;
                m.add(failure_time(topo, seed, i, leaf));
            }
            partial[b] = m;
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, blocks));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    Moments total;
    for (const auto& m : partial) total.merge(m);
    const double variance = total.m2 / (total.n - 1.0);
    return {total.mean, std::sqrt(variance / total.n)};
}

double expected_repairs(double rate, double horizon) {
    detail::require(std::isfinite(rate) && rate >= 0.0, "repair rate must be non-negative");
    detail::require(std::isfinite(horizon) && horizon >= 0.0, "horizon must be non-negative");
    return rate * horizon;
}

double poisson_pmf(long long k, double mean) {
    detail::require(k >= 0, "event count must be non-negative");
    detail::require(std::isfinite(mean) && mean >= 0.0, "Poisson mean must be non-negative");
    if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
    const double kd = static_cast<double>(k);
    return std::exp(-mean + kd * std::log(mean) - std::lgamma(kd + 1.0));
}

ServiceLife system_service_life(const std::map<std::string, double>& lives) {
    detail::require(!lives.empty(), "service-life mapping must be non-empty");
    const std::pair<const std::string, double>* best = nullptr;
    for (const auto& entry : lives) {
        detail::require(std::isfinite(entry.second) && entry.second > 0.0,
                        "life of '" + entry.first + "' must be positive");
        if (best == nullptr || entry.second < best->second) best = &entry;
    }
    return {best->second, best->first};
}

}  // namespace dwt::system
