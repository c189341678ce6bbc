#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "genuslab/rooted_map.hpp"

namespace genuslab {

/// {"n_darts": int, "sigma": [...], "alpha": [...], "root": int}
nlohmann::json map_to_json(const RootedMap& map);

/// Validates all map invariants on load.
RootedMap map_from_json(const nlohmann::json& j);

void write_maps_jsonl(std::ostream& out, const std::vector<Triangulation>& maps);
std::vector<Triangulation> read_maps_jsonl(std::istream& in);

}  // namespace genuslab
