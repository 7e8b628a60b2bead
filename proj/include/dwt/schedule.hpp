#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dwt::schedule {

using Date = std::chrono::year_month_day;

/// Parses strict ISO-8601 calendar dates (YYYY-MM-DD).
Date parse_date(std::string_view text);
std::string format_date(const Date& d);

enum class Group { Structural, Electromechanical, Control, Fasteners };

std::string_view to_string(Group g) noexcept;
Group parse_group(std::string_view text);

enum class LifeUnit { Years, Cycles };

struct ServiceLife {
    double value;
    LifeUnit unit;
    /// Usage counter consumed by a cycles-based life.
    std::string counter;
};

/// Recurs every `years` after an optional initial offset.
struct CalendarInterval {
    double years;
    double after_years = 0.0;
};

/// Recurs every `count` increments of a usage counter.
struct CycleInterval {
    double count;
    std::string counter;
};

/// Each recurrence is due at the earlier of its calendar and cycle dates.
struct WhicheverFirst {
    CalendarInterval calendar;
    CycleInterval cycles;
};

enum class EventKind { HighLoad, PostInstallInspection };

std::string_view to_string(EventKind k) noexcept;
EventKind parse_event_kind(std::string_view text);

struct EventTrigger {
    EventKind kind;
};

using Trigger = std::variant<CalendarInterval, CycleInterval, WhicheverFirst, EventTrigger>;

/// A task with no triggers is performed as required during other work and
/// never produces schedule entries.
struct MaintenanceTask {
    std::string description;
    std::vector<Trigger> triggers;
};

struct ComponentRecord {
    std::string id;
    Group group = Group::Structural;
    std::vector<std::string> failure_modes;
    std::optional<ServiceLife> service_life;
    /// Service life is the manufacturer's figure (starred in printed tables).
    bool manufacturer_specified = false;
    std::vector<std::string> specifications;
    std::vector<MaintenanceTask> tasks;
};

/// One row of the loaded-fastener list.
struct FastenerRecord {
    std::string type_size;
    std::string grade;
    std::string specification;
    std::string details;
};

struct Registry {
    std::vector<ComponentRecord> components;
    std::vector<FastenerRecord> fasteners;

    /// Unique ids, positive lives and intervals, named counters on cycle
    /// triggers. Errors carry the row index and id.
    void validate() const;
    const ComponentRecord& find(std::string_view id) const;
};

struct UsageProfile {
    /// Counter id -> increments per day. A zero rate marks a counter that is
    /// only ever logged (for example jack raise/lower cycles).
    std::map<std::string, double> counters;

    void validate() const;

    /// rotor_cycles 144000/day, yaw_oscillations 1500/day,
    /// tower_stress_cycles 1000/day, jack_cycles logged only.
    static UsageProfile defaults();
};

struct LoggedEvent {
    Date date;
    EventKind kind;
};

struct CounterReading {
    Date date;
    double cumulative;
};

struct InstallationRecord {
    Date install_date;
    std::vector<LoggedEvent> events;
    std::map<std::string, std::vector<CounterReading>> cycle_log;

    /// Log dates on or after installation and nondecreasing; cumulative
    /// counts nondecreasing.
    void validate() const;
};

enum class Reason { IntervalElapsed, CyclesElapsed, Event, LifeExpired };

std::string_view to_string(Reason r) noexcept;

struct ScheduleEntry {
    Date due_date;
    std::string component_id;
    std::string task;
    Reason reason;
    /// Counter value at which a cycle-driven entry fell due.
    std::optional<double> due_count;

    friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Every calendar, cycle, whichever-first, event and life-expiry due date in
/// [install_date, install_date + horizon], sorted by (date, component, task).
/// A year is 365 days; recurrences anchor to the install date.
std::vector<ScheduleEntry> generate_schedule(const Registry& registry, const InstallationRecord& install,
                                             const UsageProfile& usage, double horizon_years);

struct RemainingLife {
    double remaining;
    LifeUnit unit;
    double fraction_consumed;  // clamped to [0, 1]
    bool overconsumed;
};

/// Years-based lives subtract elapsed years; cycles-based lives subtract
/// elapsed * 365 * counter rate. Throws ValidationError for unlifed components.
RemainingLife remaining_service_life(const ComponentRecord& component, const UsageProfile& usage,
                                     double elapsed_years);

std::string describe(const ServiceLife& life);

}  // namespace dwt::schedule
