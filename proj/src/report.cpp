#include "dwt/report.hpp"

#include <sstream>
#include <vector>

#include "dwt/error.hpp"

namespace dwt::report {
namespace {

using schedule::ComponentRecord;
using schedule::Group;

std::string md_cell(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '|') {
            out += "\\|";
        } else if (c == '\n') {
            out += "<br>";
        } else {
            out += c;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep, bool markdown) {
    if (items.empty()) return "N/A";
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += markdown ? md_cell(items[i]) : items[i];
    }
    return out;
}

std::vector<std::string> task_names(const ComponentRecord& c) {
    std::vector<std::string> out;
    out.reserve(c.tasks.size());
    for (const auto& t : c.tasks) out.push_back(t.description);
    return out;
}

std::string life_text(const ComponentRecord& c) {
    if (!c.service_life) return "N/A";
    return describe(*c.service_life) + (c.manufacturer_specified ? "*" : "");
}

}  // namespace

Format parse_format(std::string_view tag) {
    if (tag == "csv") return Format::Csv;
    if (tag == "markdown" || tag == "md") return Format::Markdown;
    throw ValidationError("unknown report format '" + std::string(tag) + "' (expected csv or markdown)");
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string emit_schedule(std::span<const schedule::ScheduleEntry> entries, Format format) {
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "due_date,component_id,task,reason\n";
        for (const auto& e : entries) {
            os << schedule::format_date(e.due_date) << ',' << csv_field(e.component_id) << ',' << csv_field(e.task)
               << ',' << to_string(e.reason) << '\n';
        }
        return os.str();
    }
    os << "| Due Date | Component | Task | Reason |\n";
    os << "|---|---|---|---|\n";
    for (const auto& e : entries) {
        os << "| " << schedule::format_date(e.due_date) << " | " << md_cell(e.component_id) << " | "
           << md_cell(e.task) << " | " << to_string(e.reason) << " |\n";
    }
    return os.str();
}

std::string emit_registry(const schedule::Registry& registry, Format format) {
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "group,component_id,failure_modes,service_life,specifications,service_tasks\n";
        for (const auto& c : registry.components) {
            os << to_string(c.group) << ',' << csv_field(c.id) << ',' << csv_field(join(c.failure_modes, "; ", false))
               << ',' << csv_field(life_text(c)) << ',' << csv_field(join(c.specifications, "; ", false)) << ','
               << csv_field(join(task_names(c), "; ", false)) << '\n';
        }
        return os.str();
    }

    bool first = true;
    for (auto group : {Group::Structural, Group::Electromechanical, Group::Control, Group::Fasteners}) {
        std::vector<const ComponentRecord*> rows;
        for (const auto& c : registry.components) {
            if (c.group == group) rows.push_back(&c);
        }
        const bool fasteners = group == Group::Fasteners;
        if (rows.empty() && !(fasteners && !registry.fasteners.empty())) continue;

        if (!first) os << '\n';
        first = false;
        os << "## " << to_string(group) << "\n\n";
        if (!rows.empty()) {
            if (fasteners) {
                os << "| Fastener Type | Failure Modes | Service Tasks |\n|---|---|---|\n";
                for (const auto* c : rows) {
                    os << "| " << md_cell(c->id) << " | " << join(c->failure_modes, "<br>", true) << " | "
                       << join(task_names(*c), "<br>", true) << " |\n";
                }
            } else {
                os << "| Component | Failure Modes | Service Life | Specifications | Service Tasks |\n"
                   << "|---|---|---|---|---|\n";
                for (const auto* c : rows) {
                    os << "| " << md_cell(c->id) << " | " << join(c->failure_modes, "<br>", true) << " | "
                       << life_text(*c) << " | " << join(c->specifications, "<br>", true) << " | "
                       << join(task_names(*c), "<br>", true) << " |\n";
                }
            }
        }
        if (fasteners && !registry.fasteners.empty()) {
            if (!rows.empty()) os << '\n';
            os << "### Loaded fasteners\n\n"
               << "| Type/Size | Grade/Class | Specifications | Details |\n|---|---|---|---|\n";
            for (const auto& f : registry.fasteners) {
                os << "| " << md_cell(f.type_size) << " | " << md_cell(f.grade) << " | " << md_cell(f.specification)
                   << " | " << md_cell(f.details) << " |\n";
            }
        }
    }
    return os.str();
}

}  // namespace dwt::report
