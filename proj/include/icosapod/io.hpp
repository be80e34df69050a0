#pragma once

// JSON files: space.json, pod.json, stats.json. Keys are written in sorted
// order so identical inputs give identical bytes.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "icosapod/borel.hpp"
#include "icosapod/sym4.hpp"

namespace icosapod {

using json = nlohmann::json;

std::string tool_version();

json space_to_json(const Sym4Space& space);
/// Symmetrizes the matrices; throws Schema on a malformed document and
/// DegenerateBasis on dependent matrices.
Sym4Space space_from_json(const json& j);

/// extra is merged into "provenance" (tolerances, command options).
json pod_to_json(const Pod& pod, const json& extra = json::object());
Pod pod_from_json(const json& j);

json stats_to_json(const SurveyResult& stats, const json& extra = json::object());

json read_json(const std::filesystem::path& path);
void write_json(const json& j, const std::filesystem::path& path);

}  // namespace icosapod
