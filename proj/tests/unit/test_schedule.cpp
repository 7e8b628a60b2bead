#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <string>

#include "dwt/error.hpp"
#include "dwt/io.hpp"
#include "dwt/report.hpp"
#include "dwt/schedule.hpp"
#include "property.hpp"

using namespace dwt;
using namespace dwt::schedule;

namespace {

InstallationRecord install_on(const char* date) {
    InstallationRecord r;
    r.install_date = parse_date(date);
    return r;
}

std::vector<ScheduleEntry> for_component(const std::vector<ScheduleEntry>& all, const std::string& id,
                                         const std::string& task_prefix = "") {
    std::vector<ScheduleEntry> out;
    for (const auto& e : all) {
        if (e.component_id == id && e.task.rfind(task_prefix, 0) == 0) out.push_back(e);
    }
    return out;
}

std::size_t count_group(const Registry& r, Group g) {
    return std::count_if(r.components.begin(), r.components.end(), [&](const auto& c) { return c.group == g; });
}

}  // namespace

TEST(Dates, ParseAndFormat) {
    EXPECT_EQ(format_date(parse_date("2025-01-01")), "2025-01-01");
    EXPECT_EQ(format_date(parse_date("2024-02-29")), "2024-02-29");
    EXPECT_THROW(parse_date("2025-02-29"), ValidationError);
    EXPECT_THROW(parse_date("2025-1-01"), ValidationError);
    EXPECT_THROW(parse_date("2025-13-01"), ValidationError);
    EXPECT_THROW(parse_date("20250101"), ValidationError);
}

TEST(Registry, DefaultTablesComplete) {
    const auto& r = io::default_registry();
    EXPECT_EQ(count_group(r, Group::Structural), 12u);
    EXPECT_EQ(count_group(r, Group::Electromechanical), 8u);
    EXPECT_EQ(count_group(r, Group::Control), 5u);
    EXPECT_EQ(count_group(r, Group::Fasteners), 2u);
    EXPECT_EQ(r.fasteners.size(), 22u);
    EXPECT_NO_THROW(r.validate());
    const auto& tower = r.find("Tower");
    ASSERT_TRUE(tower.service_life);
    EXPECT_EQ(tower.service_life->value, 5.0);
    EXPECT_TRUE(tower.manufacturer_specified);
    EXPECT_THROW(r.find("Flux Capacitor"), ValidationError);
}

TEST(Registry, JsonRoundTrip) {
    const auto& r = io::default_registry();
    const auto doc = io::to_json(r);
    const auto back = io::registry_from_json(doc);
    EXPECT_EQ(io::to_json(back).dump(), doc.dump());
    ASSERT_EQ(back.components.size(), r.components.size());
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        EXPECT_EQ(back.components[i].id, r.components[i].id);
        EXPECT_EQ(back.components[i].tasks.size(), r.components[i].tasks.size());
        EXPECT_EQ(back.components[i].failure_modes, r.components[i].failure_modes);
    }
}

TEST(Registry, RejectsMalformedDocuments) {
    EXPECT_THROW(io::load_registry("{"), ValidationError);
    EXPECT_THROW(io::load_registry(R"({"components":[{"id":"x","group":"Nope","tasks":[]}]})"), ValidationError);
    EXPECT_THROW(io::load_registry(R"({"components":[{"id":"x","group":"Control","bogus":1}]})"), ValidationError);
    EXPECT_THROW(io::load_registry(R"({"components":[{"id":"x","group":"Control"},{"id":"x","group":"Control"}]})"),
                 ValidationError);
    try {
        io::load_registry(
            R"({"components":[{"id":"x","group":"Control","tasks":[{"description":"t","trigger":{"calendar":{"years":-1}}}]}]})");
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("components[0]"), std::string::npos) << e.what();
    }
}

TEST(Schedule, BallastTopOffAfterOneYear) {
    const auto entries =
        generate_schedule(io::default_registry(), install_on("2025-01-01"), UsageProfile::defaults(), 1.0);
    const ScheduleEntry expected{parse_date("2026-01-01"), "Ballast Foundation",
                                 "Top off ballast material every year", Reason::IntervalElapsed, std::nullopt};
    EXPECT_NE(std::find(entries.begin(), entries.end(), expected), entries.end());
}

TEST(Schedule, SortedAndWithinHorizon) {
    const auto install = install_on("2025-03-15");
    const auto entries = generate_schedule(io::default_registry(), install, UsageProfile::defaults(), 3.0);
    ASSERT_FALSE(entries.empty());
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const auto& a = entries[i - 1];
        const auto& b = entries[i];
        EXPECT_TRUE(std::tie(a.due_date, a.component_id, a.task) <= std::tie(b.due_date, b.component_id, b.task));
    }
    const auto end = std::chrono::sys_days{install.install_date} + std::chrono::days{3 * 365};
    for (const auto& e : entries) {
        EXPECT_GE(std::chrono::sys_days{e.due_date}, std::chrono::sys_days{install.install_date});
        EXPECT_LE(std::chrono::sys_days{e.due_date}, end);
    }
}

TEST(Schedule, AsRequiredTasksNeverScheduled) {
    const auto entries =
        generate_schedule(io::default_registry(), install_on("2025-01-01"), UsageProfile::defaults(), 30.0);
    for (const auto& e : entries) EXPECT_EQ(e.task.find("(as required)"), std::string::npos) << e.task;
}

TEST(Schedule, LoggedJackCyclesTriggerLubrication) {
    auto install = install_on("2025-01-01");
    install.cycle_log["jack_cycles"] = {{parse_date("2025-03-01"), 6}, {parse_date("2025-04-10"), 15}};
    const auto entries = generate_schedule(io::default_registry(), install, UsageProfile::defaults(), 1.0);
    const auto lube = for_component(entries, "Screw Jack (Pole Raising System)", "Lubricate");
    ASSERT_FALSE(lube.empty());
    EXPECT_EQ(format_date(lube.front().due_date), "2025-04-10");
    EXPECT_EQ(lube.front().reason, Reason::CyclesElapsed);
    EXPECT_EQ(lube.front().due_count, 15.0);
}

TEST(Schedule, WhicheverFirstCyclesWin) {
    auto install = install_on("2025-01-01");
    install.cycle_log["jack_cycles"] = {{parse_date("2026-06-01"), 100}};
    const auto entries = generate_schedule(io::default_registry(), install, UsageProfile::defaults(), 5.0);
    const auto insp = for_component(entries, "Screw Jack (Pole Raising System)", "Inspect every 100");
    ASSERT_FALSE(insp.empty());
    EXPECT_EQ(format_date(insp.front().due_date), "2026-06-01");
    EXPECT_EQ(insp.front().reason, Reason::CyclesElapsed);
}

TEST(Schedule, WhicheverFirstCalendarWins) {
    const auto entries =
        generate_schedule(io::default_registry(), install_on("2025-01-01"), UsageProfile::defaults(), 5.0);
    const auto insp = for_component(entries, "Screw Jack (Pole Raising System)", "Inspect every 100");
    ASSERT_EQ(insp.size(), 1u);
    // 5 x 365 days after 2025-01-01 (one leap day in between).
    EXPECT_EQ(format_date(insp.front().due_date), "2029-12-31");
    EXPECT_EQ(insp.front().reason, Reason::IntervalElapsed);
}

TEST(Schedule, HighLoadEventsFanOut) {
    auto install = install_on("2025-01-01");
    install.events = {{parse_date("2025-06-01"), EventKind::HighLoad}};
    const auto entries = generate_schedule(io::default_registry(), install, UsageProfile::defaults(), 1.0);
    std::size_t on_day = 0;
    for (const auto& e : entries) {
        if (format_date(e.due_date) == "2025-06-01" && e.reason == Reason::Event) ++on_day;
    }
    // Ballast foundation plus the five control components.
    EXPECT_EQ(on_day, 6u);
}

TEST(Schedule, SlipRingCycleLifeFromUsageRate) {
    const auto entries =
        generate_schedule(io::default_registry(), install_on("2025-01-01"), UsageProfile::defaults(), 40.0);
    const auto slip = for_component(entries, "Slip Ring", "Replace after 20M");
    ASSERT_EQ(slip.size(), 1u);
    // 20e6 / 1500 per day = 13334 days.
    const auto expect = std::chrono::sys_days{parse_date("2025-01-01")} + std::chrono::days{13334};
    EXPECT_EQ(std::chrono::sys_days{slip.front().due_date}, expect);
}

TEST(Schedule, OffsetCalendar) {
    const auto entries =
        generate_schedule(io::default_registry(), install_on("2025-01-01"), UsageProfile::defaults(), 7.0);
    const auto inv = for_component(entries, "Fimer Inverter", "Inspect annually after 5");
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(std::chrono::sys_days{inv[0].due_date},
              std::chrono::sys_days{parse_date("2025-01-01")} + std::chrono::days{6 * 365});
}

TEST(Schedule, InvalidInputs) {
    const auto& reg = io::default_registry();
    EXPECT_THROW(generate_schedule(reg, install_on("2025-01-01"), UsageProfile::defaults(), 0.0), ValidationError);
    auto install = install_on("2025-01-01");
    install.cycle_log["jack_cycles"] = {{parse_date("2025-03-01"), 10}, {parse_date("2025-04-01"), 5}};
    EXPECT_THROW(generate_schedule(reg, install, UsageProfile::defaults(), 1.0), ValidationError);
    install = install_on("2025-01-01");
    install.events = {{parse_date("2024-12-31"), EventKind::HighLoad}};
    EXPECT_THROW(generate_schedule(reg, install, UsageProfile::defaults(), 1.0), ValidationError);
    UsageProfile empty;
    EXPECT_THROW(generate_schedule(reg, install_on("2025-01-01"), empty, 1.0), ValidationError);
}

TEST(ScheduleProperty, DeterministicAndMonotoneInHorizon) {
    const auto& reg = io::default_registry();
    dwt::testing::for_all(81, 25, [&](dwt::testing::Gen& g) {
        auto install = install_on("2024-01-01");
        const auto start = std::chrono::sys_days{install.install_date};
        install.install_date = start + std::chrono::days{g.integer(0, 1000)};
        const double h1 = g.uniform(0.1, 6), h2 = h1 + g.uniform(0.1, 4);
        const auto a = generate_schedule(reg, install, UsageProfile::defaults(), h1);
        EXPECT_EQ(a, generate_schedule(reg, install, UsageProfile::defaults(), h1));
        const auto b = generate_schedule(reg, install, UsageProfile::defaults(), h2);
        for (const auto& e : a) EXPECT_NE(std::find(b.begin(), b.end(), e), b.end());
    });
}

TEST(RemainingLife, YearsAndCycles) {
    const auto& reg = io::default_registry();
    const auto r = remaining_service_life(reg.find("Tower"), UsageProfile::defaults(), 2.0);
    EXPECT_EQ(r.remaining, 3.0);
    EXPECT_NEAR(r.fraction_consumed, 0.4, 1e-15);
    EXPECT_FALSE(r.overconsumed);
    const auto over = remaining_service_life(reg.find("Tower"), UsageProfile::defaults(), 6.0);
    EXPECT_EQ(over.remaining, 0.0);
    EXPECT_EQ(over.fraction_consumed, 1.0);
    EXPECT_TRUE(over.overconsumed);
    EXPECT_THROW(remaining_service_life(reg.find("Shunt Brake"), UsageProfile::defaults(), 1.0), ValidationError);

    ComponentRecord c;
    c.id = "counter-lifed";
    c.service_life = ServiceLife{1.0e6, LifeUnit::Cycles, "yaw_oscillations"};
    const auto cyc = remaining_service_life(c, UsageProfile::defaults(), 1.0);
    EXPECT_EQ(cyc.remaining, 1.0e6 - 365.0 * 1500.0);
    EXPECT_EQ(cyc.unit, LifeUnit::Cycles);
}

TEST(Report, ScheduleCsv) {
    const std::vector<ScheduleEntry> entries{
        {parse_date("2026-01-01"), "A, Inc.", "Say \"hi\"", Reason::Event, std::nullopt}};
    EXPECT_EQ(report::emit_schedule(entries, report::Format::Csv),
              "due_date,component_id,task,reason\n2026-01-01,\"A, Inc.\",\"Say \"\"hi\"\"\",event\n");
}

TEST(Report, RegistryMarkdownDeterministic) {
    const auto& reg = io::default_registry();
    const auto md = report::emit_registry(reg, report::Format::Markdown);
    EXPECT_EQ(md, report::emit_registry(io::load_registry(io::to_json(reg).dump()), report::Format::Markdown));
    for (const char* heading : {"## Structural", "## Electromechanical", "## Control", "## Fasteners"}) {
        EXPECT_NE(md.find(heading), std::string::npos) << heading;
    }
    EXPECT_NE(md.find("5 years*"), std::string::npos);
    EXPECT_NE(md.find("### Loaded fasteners"), std::string::npos);
}

TEST(Report, FormatParsing) {
    EXPECT_EQ(report::parse_format("csv"), report::Format::Csv);
    EXPECT_EQ(report::parse_format("md"), report::Format::Markdown);
    EXPECT_THROW(report::parse_format("xml"), ValidationError);
}

TEST(Io, TopologyRoundTrip) {
    const auto doc = io::parse(R"({"series":[{"id":"a","model":{"exponential":{"rate":0.5}}},
        {"parallel":[{"id":"b","model":{"weibull":{"beta":2,"eta":10}}},{"id":"c","model":{"fixed_life":{"life":3}}}]}]})");
    const auto topo = io::topology_from_json(doc);
    EXPECT_EQ(topo.leaf_count(), 3u);
    EXPECT_EQ(io::to_json(topo), doc);
    EXPECT_THROW(io::topology_from_json(io::parse(R"({"series":[]})")), ValidationError);
}

TEST(Io, InstallationRoundTrip) {
    const auto doc = io::parse(R"({"install_date":"2025-01-01","events":[{"date":"2025-02-01","kind":"high_load"}],
        "cycle_log":{"jack_cycles":[{"date":"2025-03-01","count":15}]}})");
    const auto rec = io::install_from_json(doc);
    EXPECT_EQ(rec.events.size(), 1u);
    EXPECT_EQ(rec.cycle_log.at("jack_cycles").front().cumulative, 15.0);
    EXPECT_EQ(io::install_from_json(io::to_json(rec)).cycle_log.at("jack_cycles").size(), 1u);
    EXPECT_EQ(io::usage_from_install(doc).counters, UsageProfile::defaults().counters);
}
