#include "dwt/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

#include "dwt/error.hpp"
#include "dwt/format.hpp"
#include "dwt/units.hpp"

namespace dwt::schedule {
namespace {

using std::chrono::days;
using std::chrono::sys_days;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kMaxRecurrences = 1'000'000;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

long long years_to_days(double years) { return std::llround(years * units::kDaysPerYear); }

std::string row_context(std::size_t index, const std::string& id) {
    return "components[" + std::to_string(index) + "] (" + id + "): ";
}

void validate_calendar(const CalendarInterval& c, const std::string& ctx) {
    if (!positive(c.years)) throw ValidationError(ctx + "calendar interval must be positive");
    if (!(std::isfinite(c.after_years) && c.after_years >= 0.0)) {
        throw ValidationError(ctx + "calendar offset must be non-negative");
    }
}

void validate_cycles(const CycleInterval& c, const std::string& ctx) {
    if (!positive(c.count)) throw ValidationError(ctx + "cycle interval must be positive");
    if (c.counter.empty()) throw ValidationError(ctx + "cycle interval needs a counter id");
}

class Compiler {
public:
    Compiler(const InstallationRecord& install, const UsageProfile& usage, double horizon_years)
        : install_(install), usage_(usage), start_(install.install_date),
          end_(start_ + days{years_to_days(horizon_years)}) {}

    void require_counter(const std::string& counter, const std::string& ctx) const {
        if (!usage_.counters.contains(counter) && !install_.cycle_log.contains(counter)) {
            throw ValidationError(ctx + "cycle trigger references unknown counter '" + counter + "'");
        }
    }

    /// Date on which `counter` reaches `target`, from the log when it already
    /// has, otherwise extrapolated at the profile rate from the last reading.
    std::optional<sys_days> cycle_due(const std::string& counter, double target) const {
        sys_days last_date = start_;
        double last_count = 0.0;
        if (auto it = install_.cycle_log.find(counter); it != install_.cycle_log.end()) {
            for (const auto& reading : it->second) {
                if (reading.cumulative >= target) return sys_days{reading.date};
                last_date = sys_days{reading.date};
                last_count = reading.cumulative;
            }
        }
        const auto rate = usage_.counters.find(counter);
        if (rate == usage_.counters.end() || rate->second <= 0.0) return std::nullopt;
        const double d = std::ceil((target - last_count) / rate->second);
        if (d > 1e9) return std::nullopt;
        return last_date + days{static_cast<long long>(d)};
    }

    sys_days calendar_due(const CalendarInterval& c, std::size_t k) const {
        return start_ + days{years_to_days(c.after_years + static_cast<double>(k) * c.years)};
    }

    void add(sys_days when, const ComponentRecord& comp, const std::string& task, Reason reason,
             std::optional<double> count = std::nullopt) {
        out_.push_back({Date{when}, comp.id, task, reason, count});
    }

    void expand(const ComponentRecord& comp, const MaintenanceTask& task, const Trigger& trigger) {
        std::visit(overloaded{
                       [&](const CalendarInterval& c) {
                           for (std::size_t k = 1;; ++k) {
                               guard(k, comp);
                               const auto due = calendar_due(c, k);
                               if (due > end_) break;
                               add(due, comp, task.description, Reason::IntervalElapsed);
                           }
                       },
                       [&](const CycleInterval& c) {
                           for (std::size_t k = 1;; ++k) {
                               guard(k, comp);
                               const double target = static_cast<double>(k) * c.count;
                               const auto due = cycle_due(c.counter, target);
                               if (!due || *due > end_) break;
                               add(*due, comp, task.description, Reason::CyclesElapsed, target);
                           }
                       },
                       [&](const WhicheverFirst& w) {
                           for (std::size_t k = 1;; ++k) {
                               guard(k, comp);
                               const double target = static_cast<double>(k) * w.cycles.count;
                               const auto by_calendar = calendar_due(w.calendar, k);
                               const auto by_cycles = cycle_due(w.cycles.counter, target);
                               if (by_cycles && *by_cycles < by_calendar) {
                                   if (*by_cycles > end_) break;
                                   add(*by_cycles, comp, task.description, Reason::CyclesElapsed, target);
                               } else {
                                   if (by_calendar > end_) break;
                                   add(by_calendar, comp, task.description, Reason::IntervalElapsed);
                               }
                           }
                       },
                       [&](const EventTrigger& e) {
                           for (const auto& ev : install_.events) {
                               const sys_days when{ev.date};
                               if (ev.kind == e.kind && when >= start_ && when <= end_) {
                                   add(when, comp, task.description, Reason::Event);
                               }
                           }
                       },
                   },
                   trigger);
    }

    void expire(const ComponentRecord& comp) {
        if (!comp.service_life) return;
        const auto& life = *comp.service_life;
        const std::string text = "End of service life (" + describe(life) + ")";
        if (life.unit == LifeUnit::Years) {
            const auto due = start_ + days{years_to_days(life.value)};
            if (due <= end_) add(due, comp, text, Reason::LifeExpired);
            return;
        }
        const auto due = cycle_due(life.counter, life.value);
        if (due && *due <= end_) add(*due, comp, text, Reason::LifeExpired, life.value);
    }

    std::vector<ScheduleEntry> finish() {
        auto key = [](const ScheduleEntry& e) {
            return std::tuple<sys_days, const std::string&, const std::string&, Reason, double>(
                sys_days{e.due_date}, e.component_id, e.task, e.reason, e.due_count.value_or(-1.0));
        };
        std::sort(out_.begin(), out_.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
        // Several logged recurrences can land on one reading date; keep the
        // highest due count.
        std::vector<ScheduleEntry> merged;
        merged.reserve(out_.size());
        for (auto& e : out_) {
            if (!merged.empty()) {
                auto& prev = merged.back();
                if (prev.due_date == e.due_date && prev.component_id == e.component_id && prev.task == e.task &&
                    prev.reason == e.reason) {
                    prev = std::move(e);
                    continue;
                }
            }
            merged.push_back(std::move(e));
        }
        return merged;
    }

private:
    static void guard(std::size_t k, const ComponentRecord& comp) {
        if (k > kMaxRecurrences) {
            throw ValidationError("component '" + comp.id + "': more than " + std::to_string(kMaxRecurrences) +
                                  " recurrences within the horizon");
        }
    }

    const InstallationRecord& install_;
    const UsageProfile& usage_;
    sys_days start_;
    sys_days end_;
    std::vector<ScheduleEntry> out_;
};

}  // namespace

Date parse_date(std::string_view text) {
    auto bad = [&] { return ValidationError("invalid ISO-8601 date '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw bad();
    auto field = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, v);
        if (ec != std::errc{} || p != text.data() + pos + len) throw bad();
        return v;
    };
    const Date d{std::chrono::year{field(0, 4)}, std::chrono::month{static_cast<unsigned>(field(5, 2))},
                 std::chrono::day{static_cast<unsigned>(field(8, 2))}};
    if (!d.ok()) throw bad();
    return d;
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                  static_cast<unsigned>(d.day()));
    return buf;
}

std::string_view to_string(Group g) noexcept {
    switch (g) {
        case Group::Structural: return "Structural";
        case Group::Electromechanical: return "Electromechanical";
        case Group::Control: return "Control";
        case Group::Fasteners: return "Fasteners";
    }
    return "Unknown";
}

Group parse_group(std::string_view text) {
    for (auto g : {Group::Structural, Group::Electromechanical, Group::Control, Group::Fasteners}) {
        if (to_string(g) == text) return g;
    }
    throw ValidationError("unknown component group '" + std::string(text) + "'");
}

std::string_view to_string(EventKind k) noexcept {
    return k == EventKind::HighLoad ? "high_load" : "post_install_inspection";
}

EventKind parse_event_kind(std::string_view text) {
    if (text == "high_load") return EventKind::HighLoad;
    if (text == "post_install_inspection") return EventKind::PostInstallInspection;
    throw ValidationError("unknown event kind '" + std::string(text) + "'");
}

std::string_view to_string(Reason r) noexcept {
    switch (r) {
        case Reason::IntervalElapsed: return "interval_elapsed";
        case Reason::CyclesElapsed: return "cycles_elapsed";
        case Reason::Event: return "event";
        case Reason::LifeExpired: return "life_expired";
    }
    return "unknown";
}

std::string describe(const ServiceLife& life) {
    if (life.unit == LifeUnit::Years) {
        return format_count(life.value) + (life.value == 1.0 ? " year" : " years");
    }
    return format_count(life.value) + " cycles";
}

void Registry::validate() const {
    std::set<std::string> ids;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        const auto ctx = row_context(i, c.id);
        if (c.id.empty()) throw ValidationError(ctx + "id must be non-empty");
        if (!ids.insert(c.id).second) throw ValidationError(ctx + "duplicate component id");
        if (c.service_life) {
            if (!positive(c.service_life->value)) throw ValidationError(ctx + "service life must be positive");
            if (c.service_life->unit == LifeUnit::Cycles && c.service_life->counter.empty()) {
                throw ValidationError(ctx + "cycles-based service life needs a counter id");
            }
        }
        for (const auto& task : c.tasks) {
            const auto tctx = ctx + "task '" + task.description + "': ";
            for (const auto& trig : task.triggers) {
                std::visit(overloaded{
                               [&](const CalendarInterval& x) { validate_calendar(x, tctx); },
                               [&](const CycleInterval& x) { validate_cycles(x, tctx); },
                               [&](const WhicheverFirst& x) {
                                   validate_calendar(x.calendar, tctx);
                                   validate_cycles(x.cycles, tctx);
                               },
                               [](const EventTrigger&) {},
                           },
                           trig);
            }
        }
    }
}

const ComponentRecord& Registry::find(std::string_view id) const {
    for (const auto& c : components) {
        if (c.id == id) return c;
    }
    throw ValidationError("no component with id '" + std::string(id) + "'");
}

void UsageProfile::validate() const {
    for (const auto& [id, rate] : counters) {
        if (!(std::isfinite(rate) && rate >= 0.0)) {
            throw ValidationError("usage rate of counter '" + id + "' must be non-negative");
        }
    }
}

UsageProfile UsageProfile::defaults() {
    return {{{"jack_cycles", 0.0},
             {"rotor_cycles", 144000.0},
             {"tower_stress_cycles", 1000.0},
             {"yaw_oscillations", 1500.0}}};
}

void InstallationRecord::validate() const {
    const sys_days start{install_date};
    sys_days prev = start;
    for (const auto& e : events) {
        if (sys_days{e.date} < prev) {
            throw ValidationError("event log dates must be nondecreasing and not precede installation (" +
                                  format_date(e.date) + ")");
        }
        prev = sys_days{e.date};
    }
    for (const auto& [counter, log] : cycle_log) {
        sys_days last = start;
        double count = 0.0;
        for (const auto& r : log) {
            if (sys_days{r.date} < last) {
                throw ValidationError("cycle log '" + counter +
                                      "' dates must be nondecreasing and not precede installation");
            }
            if (!(std::isfinite(r.cumulative) && r.cumulative >= count)) {
                throw ValidationError("cycle log '" + counter + "' cumulative counts must be nondecreasing");
            }
            last = sys_days{r.date};
            count = r.cumulative;
        }
    }
}

std::vector<ScheduleEntry> generate_schedule(const Registry& registry, const InstallationRecord& install,
                                             const UsageProfile& usage, double horizon_years) {
    if (!positive(horizon_years)) throw ValidationError("schedule horizon must be positive");
    registry.validate();
    install.validate();
    usage.validate();

    Compiler compiler(install, usage, horizon_years);
    for (std::size_t i = 0; i < registry.components.size(); ++i) {
        const auto& comp = registry.components[i];
        const auto ctx = row_context(i, comp.id);
        for (const auto& task : comp.tasks) {
            for (const auto& trig : task.triggers) {
                if (const auto* c = std::get_if<CycleInterval>(&trig)) compiler.require_counter(c->counter, ctx);
                if (const auto* w = std::get_if<WhicheverFirst>(&trig)) {
                    compiler.require_counter(w->cycles.counter, ctx);
                }
            }
        }
        if (comp.service_life && comp.service_life->unit == LifeUnit::Cycles) {
            compiler.require_counter(comp.service_life->counter, ctx);
        }
    }

    for (const auto& comp : registry.components) {
        for (const auto& task : comp.tasks) {
            for (const auto& trig : task.triggers) compiler.expand(comp, task, trig);
        }
        compiler.expire(comp);
    }
    return compiler.finish();
}

RemainingLife remaining_service_life(const ComponentRecord& component, const UsageProfile& usage,
                                     double elapsed_years) {
    if (!component.service_life) {
        throw ValidationError("component '" + component.id + "' is not lifed (no service life)");
    }
    if (!(std::isfinite(elapsed_years) && elapsed_years >= 0.0)) {
        throw ValidationError("elapsed time must be non-negative");
    }
    const auto& life = *component.service_life;
    double consumed = elapsed_years;
    if (life.unit == LifeUnit::Cycles) {
        const auto it = usage.counters.find(life.counter);
        if (it == usage.counters.end()) {
            throw ValidationError("usage profile has no counter '" + life.counter + "' for component '" +
                                  component.id + "'");
        }
        consumed = elapsed_years * units::kDaysPerYear * it->second;
    }
    const double fraction = consumed / life.value;
    const bool over = fraction > 1.0;
    return {std::max(0.0, life.value - consumed), life.unit, std::min(fraction, 1.0), over};
}

}  // namespace dwt::schedule
