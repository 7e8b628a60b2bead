#include "dwt/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "dwt/error.hpp"

namespace dwt {
extern const char* const kDefaultRegistryDocument;
}

namespace dwt::io {
namespace {

using namespace schedule;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

std::string child(const std::string& where, std::string_view key) {
    return where.empty() ? std::string(key) : where + "." + std::string(key);
}

std::string child(const std::string& where, std::size_t index) {
    return where + "[" + std::to_string(index) + "]";
}

const json& object(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where.empty() ? "document" : where, "expected an object");
    return j;
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> keys) {
    for (const auto& [k, _] : j.items()) {
        bool known = false;
        for (auto allowed : keys) known = known || k == allowed;
        if (!known) fail(where.empty() ? "document" : where, "unknown field '" + k + "'");
    }
}

const json& member(const json& j, std::string_view key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(child(where, key), "missing");
    return *it;
}

const json* optional_member(const json& j, std::string_view key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
}

double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

double number(const json& j, std::string_view key, const std::string& where) {
    return number(member(j, key, where), child(where, key));
}

double number_or(const json& j, std::string_view key, const std::string& where, double fallback) {
    const json* v = optional_member(j, key);
    return v ? number(*v, child(where, key)) : fallback;
}

int integer(const json& j, std::string_view key, const std::string& where) {
    const json& v = member(j, key, where);
    if (!v.is_number_integer()) fail(child(where, key), "expected an integer");
    return v.get<int>();
}

std::string text(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

std::string text(const json& j, std::string_view key, const std::string& where) {
    return text(member(j, key, where), child(where, key));
}

std::vector<std::string> text_list(const json& j, std::string_view key, const std::string& where) {
    std::vector<std::string> out;
    const json* v = optional_member(j, key);
    if (!v) return out;
    const std::string at = child(where, key);
    if (!v->is_array()) fail(at, "expected an array of strings");
    for (std::size_t i = 0; i < v->size(); ++i) out.push_back(text((*v)[i], child(at, i)));
    return out;
}

Date date(const json& j, std::string_view key, const std::string& where) {
    const std::string at = child(where, key);
    const std::string s = text(member(j, key, where), at);
    try {
        return parse_date(s);
    } catch (const ValidationError& e) {
        fail(at, e.what());
    }
}

// Validation helpers rethrow library errors with the document location.
template <class F>
void checked(const std::string& where, F&& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        fail(where.empty() ? "document" : where, e.what());
    }
}

CalendarInterval calendar_from(const json& j, const std::string& where) {
    return {number(j, "years", where), number_or(j, "after_years", where, 0.0)};
}

Trigger trigger_from(const json& j, const std::string& where) {
    object(j, where);
    if (j.size() != 1) fail(where, "trigger must have exactly one of calendar, cycles, whichever_first, event");
    const auto& [tag, body] = *j.items().begin();
    const std::string at = child(where, tag);
    if (tag == "calendar") {
        object(body, at);
        allow_keys(body, at, {"years", "after_years"});
        return calendar_from(body, at);
    }
    if (tag == "cycles") {
        object(body, at);
        allow_keys(body, at, {"count", "counter"});
        return CycleInterval{number(body, "count", at), text(body, "counter", at)};
    }
    if (tag == "whichever_first") {
        object(body, at);
        allow_keys(body, at, {"years", "after_years", "cycles", "counter"});
        return WhicheverFirst{calendar_from(body, at),
                              CycleInterval{number(body, "cycles", at), text(body, "counter", at)}};
    }
    if (tag == "event") {
        EventKind kind{};
        checked(at, [&] { kind = parse_event_kind(text(body, at)); });
        return EventTrigger{kind};
    }
    fail(where, "unknown trigger type '" + tag + "'");
}

json calendar_json(const CalendarInterval& c) {
    json j = {{"years", c.years}};
    if (c.after_years != 0.0) j["after_years"] = c.after_years;
    return j;
}

json trigger_json(const Trigger& t) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CalendarInterval>) {
                return {{"calendar", calendar_json(v)}};
            } else if constexpr (std::is_same_v<T, CycleInterval>) {
                return {{"cycles", {{"count", v.count}, {"counter", v.counter}}}};
            } else if constexpr (std::is_same_v<T, WhicheverFirst>) {
                json body = calendar_json(v.calendar);
                body["cycles"] = v.cycles.count;
                body["counter"] = v.cycles.counter;
                return {{"whichever_first", body}};
            } else {
                return {{"event", std::string(to_string(v.kind))}};
            }
        },
        t);
}

MaintenanceTask task_from(const json& j, const std::string& where) {
    object(j, where);
    allow_keys(j, where, {"description", "trigger"});
    MaintenanceTask task{text(j, "description", where), {}};
    if (const json* t = optional_member(j, "trigger")) {
        const std::string at = child(where, "trigger");
        if (t->is_array()) {
            for (std::size_t i = 0; i < t->size(); ++i) task.triggers.push_back(trigger_from((*t)[i], child(at, i)));
        } else {
            task.triggers.push_back(trigger_from(*t, at));
        }
    }
    return task;
}

ServiceLife life_from(const json& j, const std::string& where) {
    object(j, where);
    allow_keys(j, where, {"value", "unit", "counter"});
    ServiceLife life{number(j, "value", where), LifeUnit::Years, {}};
    const std::string unit = text(j, "unit", where);
    if (unit == "years") {
        life.unit = LifeUnit::Years;
    } else if (unit == "cycles") {
        life.unit = LifeUnit::Cycles;
    } else {
        fail(child(where, "unit"), "expected \"years\" or \"cycles\", got '" + unit + "'");
    }
    if (const json* c = optional_member(j, "counter")) life.counter = text(*c, child(where, "counter"));
    return life;
}

ComponentRecord component_from(const json& j, const std::string& where) {
    object(j, where);
    allow_keys(j, where,
               {"id", "group", "failure_modes", "service_life", "manufacturer_specified", "specifications", "tasks"});
    ComponentRecord c;
    c.id = text(j, "id", where);
    const std::string ctx = where + " (" + c.id + ")";
    checked(ctx, [&] { c.group = parse_group(text(j, "group", where)); });
    c.failure_modes = text_list(j, "failure_modes", where);
    if (const json* life = optional_member(j, "service_life")) c.service_life = life_from(*life, child(where, "service_life"));
    if (const json* m = optional_member(j, "manufacturer_specified")) {
        if (!m->is_boolean()) fail(child(where, "manufacturer_specified"), "expected a boolean");
        c.manufacturer_specified = m->get<bool>();
    }
    c.specifications = text_list(j, "specifications", where);
    if (const json* tasks = optional_member(j, "tasks")) {
        const std::string at = child(where, "tasks");
        if (!tasks->is_array()) fail(at, "expected an array");
        for (std::size_t i = 0; i < tasks->size(); ++i) c.tasks.push_back(task_from((*tasks)[i], child(at, i)));
    }
    return c;
}

FastenerRecord fastener_from(const json& j, const std::string& where) {
    object(j, where);
    allow_keys(j, where, {"type_size", "grade", "specification", "details"});
    return {text(j, "type_size", where), text(j, "grade", where), text(j, "specification", where),
            text(j, "details", where)};
}

system::LifeModel model_from(const json& j, const std::string& where) {
    object(j, where);
    if (j.size() != 1) fail(where, "model must have exactly one of exponential, weibull, fixed_life");
    const auto& [tag, body] = *j.items().begin();
    const std::string at = child(where, tag);
    object(body, at);
    if (tag == "exponential") {
        allow_keys(body, at, {"rate"});
        return system::Exponential{number(body, "rate", at)};
    }
    if (tag == "weibull") {
        allow_keys(body, at, {"beta", "eta"});
        return weibull::WeibullParams{number(body, "beta", at), number(body, "eta", at)};
    }
    if (tag == "fixed_life") {
        allow_keys(body, at, {"life"});
        return system::FixedLife{number(body, "life", at)};
    }
    fail(where, "unknown life model '" + tag + "'");
}

json model_json(const system::LifeModel& m) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, system::Exponential>) {
                return {{"exponential", {{"rate", v.rate}}}};
            } else if constexpr (std::is_same_v<T, weibull::WeibullParams>) {
                return {{"weibull", {{"beta", v.shape_beta}, {"eta", v.scale_eta}}}};
            } else {
                return {{"fixed_life", {{"life", v.life}}}};
            }
        },
        m);
}

system::Topology topology_at(const json& j, const std::string& where) {
    object(j, where);
    if (j.contains("series") || j.contains("parallel")) {
        if (j.size() != 1) fail(where, "series/parallel node must have a single member");
        const bool series = j.contains("series");
        const std::string at = child(where, series ? "series" : "parallel");
        const json& list = j.begin().value();
        if (!list.is_array()) fail(at, "expected an array of nodes");
        std::vector<system::Topology> children;
        for (std::size_t i = 0; i < list.size(); ++i) children.push_back(topology_at(list[i], child(at, i)));
        return series ? system::Topology::series(std::move(children))
                      : system::Topology::parallel(std::move(children));
    }
    allow_keys(j, where, {"id", "model"});
    return system::Topology::leaf(text(j, "id", where), model_from(member(j, "model", where), child(where, "model")));
}

}  // namespace

json parse(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Registry registry_from_json(const json& doc) {
    object(doc, "");
    allow_keys(doc, "", {"components", "fasteners"});
    Registry reg;
    const json& comps = member(doc, "components", "");
    if (!comps.is_array()) fail("components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) reg.components.push_back(component_from(comps[i], child("components", i)));
    if (const json* f = optional_member(doc, "fasteners")) {
        if (!f->is_array()) fail("fasteners", "expected an array");
        for (std::size_t i = 0; i < f->size(); ++i) reg.fasteners.push_back(fastener_from((*f)[i], child("fasteners", i)));
    }
    reg.validate();
    return reg;
}

json to_json(const Registry& registry) {
    json comps = json::array();
    for (const auto& c : registry.components) {
        json j;
        j["id"] = c.id;
        j["group"] = std::string(to_string(c.group));
        j["failure_modes"] = c.failure_modes;
        if (c.service_life) {
            json life = {{"value", c.service_life->value},
                         {"unit", c.service_life->unit == LifeUnit::Years ? "years" : "cycles"}};
            if (!c.service_life->counter.empty()) life["counter"] = c.service_life->counter;
            j["service_life"] = life;
        } else {
            j["service_life"] = nullptr;
        }
        j["manufacturer_specified"] = c.manufacturer_specified;
        j["specifications"] = c.specifications;
        json tasks = json::array();
        for (const auto& t : c.tasks) {
            json tj = {{"description", t.description}};
            if (t.triggers.size() == 1) {
                tj["trigger"] = trigger_json(t.triggers.front());
            } else if (!t.triggers.empty()) {
                json list = json::array();
                for (const auto& trig : t.triggers) list.push_back(trigger_json(trig));
                tj["trigger"] = list;
            }
            tasks.push_back(tj);
        }
        j["tasks"] = tasks;
        comps.push_back(j);
    }
    json fasteners = json::array();
    for (const auto& f : registry.fasteners) {
        fasteners.push_back(
            {{"type_size", f.type_size}, {"grade", f.grade}, {"specification", f.specification}, {"details", f.details}});
    }
    return {{"components", comps}, {"fasteners", fasteners}};
}

Registry load_registry(std::string_view text) { return registry_from_json(parse(text)); }

UsageProfile usage_from_json(const json& doc) {
    object(doc, "usage");
    allow_keys(doc, "usage", {"counters"});
    const json& counters = member(doc, "counters", "usage");
    object(counters, "usage.counters");
    UsageProfile usage;
    for (const auto& [k, v] : counters.items()) usage.counters[k] = number(v, "usage.counters." + k);
    checked("usage", [&] { usage.validate(); });
    return usage;
}

json to_json(const UsageProfile& usage) {
    json counters = json::object();
    for (const auto& [k, v] : usage.counters) counters[k] = v;
    return {{"counters", counters}};
}

InstallationRecord install_from_json(const json& doc) {
    object(doc, "");
    allow_keys(doc, "", {"install_date", "events", "cycle_log", "usage"});
    InstallationRecord rec{date(doc, "install_date", ""), {}, {}};
    if (const json* ev = optional_member(doc, "events")) {
        if (!ev->is_array()) fail("events", "expected an array");
        for (std::size_t i = 0; i < ev->size(); ++i) {
            const std::string at = child("events", i);
            const json& e = object((*ev)[i], at);
            allow_keys(e, at, {"date", "kind"});
            LoggedEvent le{date(e, "date", at), {}};
            checked(child(at, "kind"), [&] { le.kind = parse_event_kind(text(e, "kind", at)); });
            rec.events.push_back(le);
        }
    }
    if (const json* log = optional_member(doc, "cycle_log")) {
        object(*log, "cycle_log");
        for (const auto& [counter, readings] : log->items()) {
            const std::string at = "cycle_log." + counter;
            if (!readings.is_array()) fail(at, "expected an array of readings");
            auto& out = rec.cycle_log[counter];
            for (std::size_t i = 0; i < readings.size(); ++i) {
                const std::string ri = child(at, i);
                const json& r = object(readings[i], ri);
                allow_keys(r, ri, {"date", "count"});
                out.push_back({date(r, "date", ri), number(r, "count", ri)});
            }
        }
    }
    checked("", [&] { rec.validate(); });
    return rec;
}

json to_json(const InstallationRecord& install) {
    json events = json::array();
    for (const auto& e : install.events) {
        events.push_back({{"date", format_date(e.date)}, {"kind", std::string(to_string(e.kind))}});
    }
    json log = json::object();
    for (const auto& [counter, readings] : install.cycle_log) {
        json arr = json::array();
        for (const auto& r : readings) arr.push_back({{"date", format_date(r.date)}, {"count", r.cumulative}});
        log[counter] = arr;
    }
    return {{"install_date", format_date(install.install_date)}, {"events", events}, {"cycle_log", log}};
}

UsageProfile usage_from_install(const json& doc) {
    if (const json* u = optional_member(doc, "usage")) return usage_from_json(*u);
    return UsageProfile::defaults();
}

json to_json(const ScheduleEntry& entry) {
    json j = {{"due_date", format_date(entry.due_date)},
              {"component_id", entry.component_id},
              {"task", entry.task},
              {"reason", std::string(to_string(entry.reason))}};
    if (entry.due_count) j["due_count"] = *entry.due_count;
    return j;
}

system::Topology topology_from_json(const json& doc) {
    auto topo = topology_at(doc, "topology");
    checked("topology", [&] { topo.validate(); });
    return topo;
}

json to_json(const system::Topology& topo) {
    using Kind = system::Topology::Kind;
    if (topo.kind() == Kind::Leaf) return {{"id", topo.component_id()}, {"model", model_json(topo.model())}};
    json list = json::array();
    for (const auto& c : topo.children()) list.push_back(to_json(c));
    return {{topo.kind() == Kind::Series ? "series" : "parallel", list}};
}

bearing::PipelineInput bearing_input_from_json(const json& doc) {
    object(doc, "");
    allow_keys(doc, "",
               {"geometry", "loads", "half_arc_deg", "life_exponent_p", "factors", "oscillations_per_day"});
    bearing::PipelineInput in;

    const json& g = object(member(doc, "geometry", ""), "geometry");
    allow_keys(g, "geometry",
               {"groove_factor_fcm", "rows_i", "ball_count_z", "ball_diameter_mm", "contact_angle_deg",
                "raceway_center_diameter_mm"});
    in.geometry = {number(g, "groove_factor_fcm", "geometry"), integer(g, "rows_i", "geometry"),
                   integer(g, "ball_count_z", "geometry"),     number(g, "ball_diameter_mm", "geometry"),
                   number(g, "contact_angle_deg", "geometry"), number(g, "raceway_center_diameter_mm", "geometry")};

    const json& l = object(member(doc, "loads", ""), "loads");
    allow_keys(l, "loads", {"radial_n", "axial_n", "moment_nm"});
    in.loads = {number_or(l, "radial_n", "loads", 0.0), number_or(l, "axial_n", "loads", 0.0),
                number_or(l, "moment_nm", "loads", 0.0)};

    in.half_arc_deg = number_or(doc, "half_arc_deg", "", in.half_arc_deg);
    in.life_exponent_p = number_or(doc, "life_exponent_p", "", in.life_exponent_p);
    in.oscillations_per_day = number_or(doc, "oscillations_per_day", "", in.oscillations_per_day);
    if (const json* f = optional_member(doc, "factors")) {
        object(*f, "factors");
        allow_keys(*f, "factors", {"a1", "a2", "a3", "a4"});
        in.factors = {number_or(*f, "a1", "factors", 1.0), number_or(*f, "a2", "factors", 1.0),
                      number_or(*f, "a3", "factors", 1.0), number_or(*f, "a4", "factors", 1.0)};
    }
    return in;
}

json to_json(const bearing::PipelineInput& in) {
    const auto& g = in.geometry;
    return {{"geometry",
             {{"groove_factor_fcm", g.groove_factor_fcm},
              {"rows_i", g.rows_i},
              {"ball_count_z", g.ball_count_z},
              {"ball_diameter_mm", g.ball_diameter_mm},
              {"contact_angle_deg", g.contact_angle_deg},
              {"raceway_center_diameter_mm", g.raceway_center_diameter_mm}}},
            {"loads", {{"radial_n", in.loads.radial_n}, {"axial_n", in.loads.axial_n}, {"moment_nm", in.loads.moment_nm}}},
            {"half_arc_deg", in.half_arc_deg},
            {"life_exponent_p", in.life_exponent_p},
            {"factors", {{"a1", in.factors.a1}, {"a2", in.factors.a2}, {"a3", in.factors.a3}, {"a4", in.factors.a4}}},
            {"oscillations_per_day", in.oscillations_per_day}};
}

json to_json(const bearing::PipelineResult& r) {
    return {{"ca", r.ca},
            {"ca_osc", r.ca_osc},
            {"pea", r.pea},
            {"l10", r.l10},
            {"lnm", r.lnm},
            {"raceway_cycles", r.raceway_cycles},
            {"years_oscillation_basis", r.years_oscillation_basis},
            {"years_raceway_basis", r.years_raceway_basis}};
}

const Registry& default_registry() {
    static const Registry reg = load_registry(kDefaultRegistryDocument);
    return reg;
}

std::string_view default_registry_json() { return kDefaultRegistryDocument; }

}  // namespace dwt::io
