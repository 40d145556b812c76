#include "tileforge/voxels.hpp"

#include <array>
#include <map>
#include <sstream>

namespace tileforge {

VoxelFormat parse_voxel_format(const std::string& name) {
  if (name == "xyz") return VoxelFormat::xyz;
  if (name == "obj") return VoxelFormat::obj;
  throw Error("unknown voxel format '" + name + "' (expected xyz or obj)");
}

std::string to_xyz(const LatticeTile& t) {
  std::ostringstream os;
  for (const auto& c : t) {
    for (std::size_t k = 0; k < c.dim(); ++k) os << (k ? " " : "") << c[k];
    os << '\n';
  }
  return os.str();
}

std::string to_obj(const LatticeTile& t) {
  if (t.dim() != 3) throw Error("obj export needs a 3-D tile");
  // Corner k of a cube is (k>>2 & 1, k>>1 & 1, k & 1) relative to the cell.
  static constexpr std::array<std::array<int, 4>, 6> kFaces{{
      {0, 1, 3, 2},  // x = 0
      {4, 6, 7, 5},  // x = 1
      {0, 4, 5, 1},  // y = 0
      {2, 3, 7, 6},  // y = 1
      {0, 2, 6, 4},  // z = 0
      {1, 5, 7, 3},  // z = 1
  }};
  std::map<Point, std::size_t> vertex_id;
  std::vector<Point> vertices;
  std::vector<std::array<std::size_t, 4>> faces;
  for (const auto& c : t) {
    std::array<std::size_t, 8> ids{};
    for (int k = 0; k < 8; ++k) {
      const Point v{c[0] + ((k >> 2) & 1), c[1] + ((k >> 1) & 1), c[2] + (k & 1)};
      auto [it, fresh] = vertex_id.emplace(v, vertices.size() + 1);
      if (fresh) vertices.push_back(v);
      ids[static_cast<std::size_t>(k)] = it->second;
    }
    for (const auto& f : kFaces) {
      faces.push_back({ids[static_cast<std::size_t>(f[0])], ids[static_cast<std::size_t>(f[1])],
                       ids[static_cast<std::size_t>(f[2])], ids[static_cast<std::size_t>(f[3])]});
    }
  }
  std::ostringstream os;
  for (const auto& v : vertices) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto& f : faces) os << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
  return os.str();
}

std::string export_voxels(const LatticeTile& t, VoxelFormat format) {
  return format == VoxelFormat::xyz ? to_xyz(t) : to_obj(t);
}

LatticeTile certificate_cells(const TilingCertificate& cert) {
  std::vector<Point> cells;
  for (const auto& pl : cert.placements) {
    if (pl.tile_id >= cert.tiles.size()) throw Error("placement names an unknown tile");
    auto placed = placed_cells(cert.region, cert.tiles[pl.tile_id], pl.offset);
    if (!placed) throw Error("placement leaves the region");
    cells.insert(cells.end(), placed->begin(), placed->end());
  }
  return LatticeTile::from_unsorted(cert.region.dim(), std::move(cells));
}

}  // namespace tileforge
