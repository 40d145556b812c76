#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tileforge/boardgames.hpp"
#include "tileforge/gadgets.hpp"
#include "tileforge/lattice.hpp"
#include "tileforge/simulate.hpp"
#include "tileforge/solver.hpp"

namespace tileforge {

using Json = nlohmann::json;

struct NamedTile {
  std::string name;
  LatticeTile tile;
};

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json tile_to_json(const LatticeTile& t, const std::string& name = "");
NamedTile tile_from_json(const Json& j);
// Accepts a single tile object, an array of tiles, or {"tiles": [...]}.
std::vector<NamedTile> tiles_from_json(const Json& j);

Json domino_to_json(const DominoSet& r);
DominoSet domino_from_json(const Json& j);

// With `representatives_only`, stores one triple per diagonal orbit and sets
// "cyclic_closure": true.
Json triomino_to_json(const CyclicTriominoSet& s, bool representatives_only = false);
CyclicTriominoSet triomino_from_json(const Json& j);

Json grid_to_json(const GridAssignment& g);
GridAssignment grid_from_json(const Json& j);

Json region_to_json(const Region& r);
Region region_from_json(const Json& j);

Json certificate_to_json(const TilingCertificate& c);
TilingCertificate certificate_from_json(const Json& j);

Json gadgets_to_json(const GadgetSet& g);

Json size_to_json(const SimulationSize& s);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tileforge
