#include "surfgenus/report_json.hpp"

#include <string>

#include "surfgenus/error.hpp"

namespace surfgenus {

namespace {

void check_schema(const nlohmann::json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    throw SurfaceError(ErrorCode::ParseError, "unsupported schema_version");
}

}  // namespace

nlohmann::json report_to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["faces"] = r.faces;
  j["euler"] = r.euler_characteristic;
  j["orientable"] = r.orientable;
  j["connected_components"] = r.connected_components;
  j["boundary_loops"] = r.boundary_loop_count;
  j["betti"] = r.betti;
  j["ck"] = r.ck;
  j["genus"] = r.genus ? nlohmann::json(*r.genus) : nlohmann::json(nullptr);
  return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
  check_schema(j);
  try {
    InvariantReport r;
    r.vertices = j.at("vertices").get<std::size_t>();
    r.edges = j.at("edges").get<std::size_t>();
    r.faces = j.at("faces").get<std::size_t>();
    r.euler_characteristic = j.at("euler").get<std::int64_t>();
    r.orientable = j.at("orientable").get<bool>();
    r.connected_components = j.at("connected_components").get<std::size_t>();
    r.boundary_loop_count = j.at("boundary_loops").get<std::size_t>();
    r.betti = j.at("betti").get<std::array<std::size_t, 3>>();
    r.ck = j.at("ck").get<std::array<std::size_t, 3>>();
    if (!j.at("genus").is_null()) r.genus = j.at("genus").get<std::size_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw SurfaceError(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json verdict_to_json(const StabilizationVerdict& v) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["c1_sequence"] = v.c1_sequence;
  j["status"] = std::string(status_name(v.status));
  j["genus_estimate"] = v.genus_estimate;
  j["plateau_start"] = v.plateau_start ? nlohmann::json(*v.plateau_start) : nlohmann::json(nullptr);
  j["window"] = v.window;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : v.complement_checks)
    checks.push_back({{"step", c.step}, {"component_c1", c.component_c1}, {"valid", c.valid}});
  j["complement_checks"] = checks;
  j["note"] =
      "finite data gives a lower bound on genus; stabilization is certified only relative to the provided exhaustion";
  return j;
}

StabilizationVerdict verdict_from_json(const nlohmann::json& j) {
  check_schema(j);
  try {
    StabilizationVerdict v;
    v.c1_sequence = j.at("c1_sequence").get<std::vector<std::size_t>>();
    const auto status = j.at("status").get<std::string>();
    if (status == status_name(StabilizationStatus::Stabilized))
      v.status = StabilizationStatus::Stabilized;
    else if (status == status_name(StabilizationStatus::NotStabilized))
      v.status = StabilizationStatus::NotStabilized;
    else
      throw SurfaceError(ErrorCode::ParseError, "unknown status " + status);
    v.genus_estimate = j.at("genus_estimate").get<std::size_t>();
    if (!j.at("plateau_start").is_null()) v.plateau_start = j.at("plateau_start").get<std::size_t>();
    v.window = j.at("window").get<std::size_t>();
    for (const auto& c : j.at("complement_checks"))
      v.complement_checks.push_back(ComplementCheck{c.at("step").get<std::size_t>(),
                                                    c.at("component_c1").get<std::vector<std::size_t>>(),
                                                    c.at("valid").get<bool>()});
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw SurfaceError(ErrorCode::ParseError, e.what());
  }
}

}  // namespace surfgenus
