#pragma once

// JSON documents for registries, installation logs, usage profiles, system
// topologies and bearing inputs. Every malformed field surfaces as a
// ValidationError naming its location (e.g. "components[3].tasks[0].trigger").

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dwt/bearing.hpp"
#include "dwt/schedule.hpp"
#include "dwt/system.hpp"

namespace dwt::io {

using json = nlohmann::ordered_json;

json parse(std::string_view text);
std::string read_file(const std::filesystem::path& path);

schedule::Registry registry_from_json(const json& doc);
json to_json(const schedule::Registry& registry);

/// Validated registry from document text.
schedule::Registry load_registry(std::string_view text);

schedule::UsageProfile usage_from_json(const json& doc);
json to_json(const schedule::UsageProfile& usage);

/// {"install_date", "events": [...], "cycle_log": {...}}. An optional "usage"
/// member is read separately by usage_from_install.
schedule::InstallationRecord install_from_json(const json& doc);
json to_json(const schedule::InstallationRecord& install);

/// Usage embedded in an installation document, or the defaults.
schedule::UsageProfile usage_from_install(const json& doc);

json to_json(const schedule::ScheduleEntry& entry);

system::Topology topology_from_json(const json& doc);
json to_json(const system::Topology& topo);

/// {"geometry": {...}, "loads": {...}, "half_arc_deg", "life_exponent_p",
///  "factors": {...}, "oscillations_per_day"}; loads and geometry required.
bearing::PipelineInput bearing_input_from_json(const json& doc);
json to_json(const bearing::PipelineInput& in);
json to_json(const bearing::PipelineResult& r);

/// The maintenance tables shipped with the library.
const schedule::Registry& default_registry();
std::string_view default_registry_json();

}  // namespace dwt::io
