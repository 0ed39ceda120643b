#pragma once

#include <json.hpp>

#include "surfgenus/cohomology.hpp"
#include "surfgenus/exhaustion.hpp"

namespace surfgenus {

inline constexpr int kSchemaVersion = 1;

// {schema_version, vertices, edges, faces, euler, orientable, connected_components,
//  boundary_loops, betti:[3], ck:[3], genus}; genus is null for disconnected surfaces.
nlohmann::json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const StabilizationVerdict& v);
StabilizationVerdict verdict_from_json(const nlohmann::json& j);

}  // namespace surfgenus
