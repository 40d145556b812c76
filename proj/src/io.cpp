#include "tileforge/io.hpp"

#include <fstream>

namespace tileforge {

namespace {

Json triples_to_json(const std::vector<Triple>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back({t.a, t.b, t.c});
  return out;
}

Json pairs_to_json(const std::set<ValuePair>& ps) {
  Json out = Json::array();
  for (const auto& [a, b] : ps) out.push_back({a, b});
  return out;
}

std::set<ValuePair> pairs_from_json(const Json& j) {
  std::set<ValuePair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error("pairs must be [a, b]");
    out.insert({p[0].get<int>(), p[1].get<int>()});
  }
  return out;
}

template <typename F>
auto wrap_json_errors(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (int c : p.coords()) out.push_back(c);
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || j.size() > kMaxDim) throw Error("point must be a non-empty integer array");
  std::vector<int> coords = j.get<std::vector<int>>();
  return Point::from(coords);
}

Json tile_to_json(const LatticeTile& t, const std::string& name) {
  Json cells = Json::array();
  for (const auto& c : t) cells.push_back(point_to_json(c));
  return {{"dim", t.dim()}, {"name", name}, {"cells", cells}};
}

NamedTile tile_from_json(const Json& j) {
  return wrap_json_errors("tile", [&] {
    const std::size_t dim = j.at("dim").get<std::size_t>();
    if (dim < 1 || dim > kMaxDim) throw Error("tile dimension out of range");
    std::vector<Point> cells;
    for (const auto& c : j.at("cells")) {
      Point p = point_from_json(c);
      if (p.dim() != dim) throw Error("cell " + p.str() + " does not match the tile dimension");
      cells.push_back(p);
    }
    return NamedTile{j.value("name", std::string()), LatticeTile(dim, std::move(cells))};
  });
}

std::vector<NamedTile> tiles_from_json(const Json& j) {
  if (j.is_object() && j.contains("tiles")) return tiles_from_json(j.at("tiles"));
  if (j.is_object()) return {tile_from_json(j)};
  if (!j.is_array()) throw Error("expected a tile or a list of tiles");
  std::vector<NamedTile> out;
  for (const auto& t : j) out.push_back(tile_from_json(t));
  return out;
}

Json domino_to_json(const DominoSet& r) { return {{"m", r.m}, {"R1", pairs_to_json(r.r1)}, {"R2", pairs_to_json(r.r2)}}; }

DominoSet domino_from_json(const Json& j) {
  return wrap_json_errors("domino set", [&] {
    DominoSet r;
    r.m = j.at("m").get<int>();
    r.r1 = pairs_from_json(j.at("R1"));
    r.r2 = pairs_from_json(j.at("R2"));
    r.validate();
    return r;
  });
}

Json triomino_to_json(const CyclicTriominoSet& s, bool representatives_only) {
  Json out = {{"n", s.n}};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Triple> ts;
    for (const auto& t : s.rules[i].members()) {
      if (!representatives_only || t.a == 0) ts.push_back(t);
    }
    out["S" + std::to_string(i + 1)] = triples_to_json(ts);
  }
  if (representatives_only) out["cyclic_closure"] = true;
  return out;
}

CyclicTriominoSet triomino_from_json(const Json& j) {
  return wrap_json_errors("triomino set", [&] {
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error("triomino modulus must be positive");
    const bool closure = j.value("cyclic_closure", false);
    CyclicTriominoSet s(n);
    for (std::size_t i = 0; i < 4; ++i) {
      for (const auto& t : j.at("S" + std::to_string(i + 1))) {
        if (!t.is_array() || t.size() != 3) throw Error("triples must be [a, b, c]");
        const Triple base{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
        if (!closure) {
          s.rules[i].insert(base);
          continue;
        }
        for (int k = 0; k < n; ++k) s.rules[i].insert({(base.a + k) % n, (base.b + k) % n, (base.c + k) % n});
      }
    }
    return s;
  });
}

Json grid_to_json(const GridAssignment& g) { return {{"px", g.px()}, {"py", g.py()}, {"values", g.values()}}; }

GridAssignment grid_from_json(const Json& j) {
  return wrap_json_errors("grid", [&] {
    auto values = j.at("values").get<std::vector<std::vector<int>>>();
    auto g = GridAssignment::from_rows(std::move(values));
    if (j.contains("px") && j.at("px").get<int>() != g.px()) throw Error("px does not match the values array");
    if (j.contains("py") && j.at("py").get<int>() != g.py()) throw Error("py does not match the values array");
    return g;
  });
}

Json region_to_json(const Region& r) {
  Json holes = Json::array();
  for (const auto& h : r.holes) holes.push_back(point_to_json(h));
  return {{"mode", r.mode == RegionMode::torus ? "torus" : "bounded"}, {"dims", r.dims}, {"holes", holes}};
}

Region region_from_json(const Json& j) {
  return wrap_json_errors("region", [&] {
    const std::string mode = j.value("mode", std::string("torus"));
    if (mode != "torus" && mode != "bounded") throw Error("region mode must be torus or bounded");
    auto dims = j.at("dims").get<std::vector<int>>();
    std::vector<Point> holes;
    if (j.contains("holes")) {
      for (const auto& h : j.at("holes")) holes.push_back(point_from_json(h));
    }
    const std::size_t d = dims.size();
    return Region(mode == "torus" ? RegionMode::torus : RegionMode::bounded, std::move(dims),
                  LatticeTile::from_unsorted(d, std::move(holes)));
  });
}

Json certificate_to_json(const TilingCertificate& c) {
  Json tiles = Json::array();
  for (std::size_t i = 0; i < c.tiles.size(); ++i) tiles.push_back(tile_to_json(c.tiles[i], "t" + std::to_string(i)));
  Json placements = Json::array();
  for (const auto& p : c.placements) placements.push_back({{"tile", p.tile_id}, {"offset", point_to_json(p.offset)}});
  return {{"region", region_to_json(c.region)}, {"tiles", tiles}, {"placements", placements}};
}

TilingCertificate certificate_from_json(const Json& j) {
  return wrap_json_errors("certificate", [&] {
    TilingCertificate c;
    c.region = region_from_json(j.at("region"));
    for (auto& t : tiles_from_json(j.at("tiles"))) c.tiles.push_back(std::move(t.tile));
    for (const auto& p : j.at("placements")) {
      c.placements.push_back({p.at("tile").get<std::size_t>(), point_from_json(p.at("offset"))});
    }
    return c;
  });
}

Json gadgets_to_json(const GadgetSet& g) {
  Json layout = Json::array();
  for (const auto& s : g.layout) {
    layout.push_back({{"index", s.index}, {"group", s.group}, {"triple", {s.triple.a, s.triple.b, s.triple.c}}});
  }
  Json out = {{"n", g.n},
              {"m", g.m},
              {"layout", layout},
              {"filler", tile_to_json(g.filler, "filler")},
              {"empty_brick", tile_to_json(g.empty_brick, "empty_brick")},
              {"brick", tile_to_json(g.brick, "brick")}};
  if (g.brick3) out["brick3"] = tile_to_json(*g.brick3, "brick3");
  if (g.filler3) out["filler3"] = tile_to_json(*g.filler3, "filler3");
  return out;
}

Json size_to_json(const SimulationSize& s) {
  Json tiles = Json::array();
  for (const auto& c : s.tile_cells) tiles.push_back(c.str());
  return {{"dim", s.frame.dim},
          {"l", s.frame.l},
          {"m", s.frame.m},
          {"period", s.frame.period},
          {"s_cells", s.s_cells.str()},
          {"tile_cells", tiles},
          {"total_cells", s.total_cells.str()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace tileforge
