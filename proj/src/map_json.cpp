#include "genuslab/map_json.hpp"

#include <istream>
#include <ostream>

namespace genuslab {

nlohmann::json map_to_json(const RootedMap& map) {
  nlohmann::json j;
  j["n_darts"] = map.dart_count();
  j["sigma"] = map.sigma_perm();
  j["alpha"] = map.alpha_perm();
  j["root"] = map.root();
  return j;
}

RootedMap map_from_json(const nlohmann::json& j) {
  if (!j.contains("n_darts") || !j.contains("sigma") || !j.contains("alpha") || !j.contains("root"))
    throw Error(ErrorCode::IoError, "map object missing required keys");
  std::vector<Dart> sigma = j.at("sigma").get<std::vector<Dart>>();
  std::vector<Dart> alpha = j.at("alpha").get<std::vector<Dart>>();
  const auto n = j.at("n_darts").get<std::size_t>();
  if (sigma.size() != n || alpha.size() != n)
    throw Error(ErrorCode::IoError, "n_darts does not match permutation length");
  return RootedMap::build(std::move(sigma), std::move(alpha), j.at("root").get<Dart>());
}

void write_maps_jsonl(std::ostream& out, const std::vector<Triangulation>& maps) {
  for (const auto& t : maps) out << map_to_json(t.map()).dump() << '\n';
}

std::vector<Triangulation> read_maps_jsonl(std::istream& in) {
  std::vector<Triangulation> maps;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    maps.push_back(Triangulation::from_map(map_from_json(nlohmann::json::parse(line))));
  }
  return maps;
}

}  // namespace genuslab
