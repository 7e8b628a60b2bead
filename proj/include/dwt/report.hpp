#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dwt/schedule.hpp"

namespace dwt::report {

enum class Format { Csv, Markdown };

Format parse_format(std::string_view tag);

/// CSV: header due_date,component_id,task,reason with RFC-4180 quoting.
/// Markdown: one table, same columns.
std::string emit_schedule(std::span<const schedule::ScheduleEntry> entries, Format format);

/// Markdown: one section per group with the five-column layout (Component,
/// Failure Modes, Service Life, Specifications, Service Tasks); the Fasteners
/// section uses (Fastener Type, Failure Modes, Service Tasks) followed by the
/// loaded-fastener list. CSV: one row per component, list cells joined by "; ".
std::string emit_registry(const schedule::Registry& registry, Format format);

/// RFC-4180 field quoting.
std::string csv_field(std::string_view s);

}  // namespace dwt::report
