#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tileforge/lattice.hpp"

namespace tileforge {

enum class RegionMode { bounded, torus };

// A finite box [0, dims) or the torus Z^d / dims, minus obstacle cells.
struct Region {
  RegionMode mode = RegionMode::torus;
  std::vector<int> dims;
  LatticeTile holes;

  Region() = default;
  Region(RegionMode mode, std::vector<int> dims);
  Region(RegionMode mode, std::vector<int> dims, LatticeTile holes);

  std::size_t dim() const { return dims.size(); }
  std::uint64_t volume() const;
  bool in_box(const Point& p) const;
  // Row-major rank of an in-box point, last axis fastest.
  std::uint64_t index(const Point& p) const;
  Point point_at(std::uint64_t index) const;
};

struct Placement {
  std::size_t tile_id = 0;
  Point offset;

  bool operator==(const Placement&) const = default;
};

struct TilingCertificate {
  Region region;
  std::vector<LatticeTile> tiles;
  std::vector<Placement> placements;
};

enum class SolveStatus { sat, unsat, resource_exhausted };

struct SolveOptions {
  std::uint64_t max_cells = 10'000'000;        // free region cells
  std::uint64_t max_matrix_entries = 60'000'000;  // sum of placement sizes
  std::uint64_t max_nodes = 0;                 // search nodes, 0 = unlimited
};

struct SolveResult {
  SolveStatus status = SolveStatus::unsat;
  std::optional<TilingCertificate> certificate;
  std::uint64_t nodes = 0;
  std::string message;

  bool sat() const { return status == SolveStatus::sat; }
  bool unsat() const { return status == SolveStatus::unsat; }
};

// Exact-cover search over all translates of `tiles` that fit the region.
// Branches on the uncovered cell with the fewest admissible placements,
// ties broken by cell rank; rows are ordered by (tile id, offset).
SolveResult solve(const Region& region, const std::vector<LatticeTile>& tiles, const SolveOptions& options = {});

struct VerifyResult {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

// Exact partition check of a certificate, independent of the search.
VerifyResult verify(const TilingCertificate& cert);

// Cells a placement covers, wrapped into the box in torus mode. Returns
// nullopt when a cell leaves a bounded region.
std::optional<std::vector<Point>> placed_cells(const Region& region, const LatticeTile& tile, const Point& offset);

}  // namespace tileforge
