#include "tileforge/solver.hpp"

#include <algorithm>

namespace tileforge {

Region::Region(RegionMode mode, std::vector<int> dims) : Region(mode, dims, LatticeTile(dims.size())) {}

Region::Region(RegionMode mode_, std::vector<int> dims_, LatticeTile holes_)
    : mode(mode_), dims(std::move(dims_)), holes(std::move(holes_)) {
  if (dims.empty() || dims.size() > kMaxDim) throw Error("region dimension outside 1.." + std::to_string(kMaxDim));
  for (int e : dims) {
    if (e < 1) throw Error("region extents must be >= 1");
  }
  if (holes.dim() != dims.size()) throw Error("hole dimension does not match the region");
  for (const auto& h : holes) {
    if (!in_box(h)) throw Error("hole " + h.str() + " outside the region");
  }
}

std::uint64_t Region::volume() const {
  std::uint64_t v = 1;
  for (int e : dims) v *= static_cast<std::uint64_t>(e);
  return v;
}

bool Region::in_box(const Point& p) const {
  if (p.dim() != dims.size()) return false;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (p[k] < 0 || p[k] >= dims[k]) return false;
  }
  return true;
}

std::uint64_t Region::index(const Point& p) const {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    idx = idx * static_cast<std::uint64_t>(dims[k]) + static_cast<std::uint64_t>(p[k]);
  }
  return idx;
}

Point Region::point_at(std::uint64_t index) const {
  Point p(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    p[k] = static_cast<int>(index % static_cast<std::uint64_t>(dims[k]));
    index /= static_cast<std::uint64_t>(dims[k]);
  }
  return p;
}

std::optional<std::vector<Point>> placed_cells(const Region& region, const LatticeTile& tile, const Point& offset) {
  std::vector<Point> out;
  out.reserve(tile.size());
  for (const auto& c : tile) {
    Point p = c + offset;
    if (region.mode == RegionMode::torus) {
      p = wrap(p, region.dims);
    } else if (!region.in_box(p)) {
      return std::nullopt;
    }
    out.push_back(p);
  }
  return out;
}

namespace {

// Dancing-links exact cover matrix. Node 0 is the root, nodes 1..C are
// column headers, the rest are row entries.
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns) : size_(columns + 1, 0) {
    const std::size_t n = columns + 1;
    left_.resize(n);
    right_.resize(n);
    up_.resize(n);
    down_.resize(n);
    col_.resize(n);
    row_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      left_[i] = static_cast<int>(i == 0 ? columns : i - 1);
      right_[i] = static_cast<int>(i == columns ? 0 : i + 1);
      up_[i] = down_[i] = col_[i] = static_cast<int>(i);
    }
  }

  // `cols` are 0-based column ids, distinct.
  void add_row(int row_id, const std::vector<int>& cols) {
    int first = -1;
    for (int c0 : cols) {
      const int c = c0 + 1;
      const int node = static_cast<int>(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[c]);
      down_.push_back(c);
      col_.push_back(c);
      row_.push_back(row_id);
      down_[up_[c]] = node;
      up_[c] = node;
      ++size_[c];
      if (first < 0) {
        first = node;
      } else {
        right_[node] = first;
        left_[node] = left_[first];
        right_[left_[first]] = node;
        left_[first] = node;
      }
    }
  }

  // Returns chosen row ids, or nullopt when exhausted. Throws ResourceError
  // past the node budget.
  std::optional<std::vector<int>> search(std::uint64_t max_nodes, std::uint64_t& nodes) {
    struct Frame {
      int column;
      int node;
    };
    std::vector<Frame> stack;
    auto apply = [&](int node) {
      for (int j = right_[node]; j != node; j = right_[j]) cover(col_[j]);
    };
    auto retract = [&](int node) {
      for (int j = left_[node]; j != node; j = left_[j]) uncover(col_[j]);
    };

    bool descend = true;
    while (true) {
      if (descend) {
        if (right_[0] == 0) {
          std::vector<int> rows;
          for (const auto& f : stack) rows.push_back(row_[f.node]);
          return rows;
        }
        int best = right_[0];
        for (int c = right_[best]; c != 0; c = right_[c]) {
          if (size_[c] < size_[best]) best = c;
        }
        cover(best);
        const int first = down_[best];
        if (first != best) {
          if (++nodes > max_nodes && max_nodes) throw ResourceError("search node budget exhausted");
          stack.push_back({best, first});
          apply(first);
          continue;
        }
        uncover(best);
        descend = false;
      }
      // Backtrack to the next alternative row.
      if (stack.empty()) return std::nullopt;
      Frame& top = stack.back();
      retract(top.node);
      top.node = down_[top.node];
      if (top.node != top.column) {
        if (++nodes > max_nodes && max_nodes) throw ResourceError("search node budget exhausted");
        apply(top.node);
        descend = true;
      } else {
        uncover(top.column);
        stack.pop_back();
      }
    }
  }

 private:
  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[col_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  std::vector<int> size_;
  std::vector<int> left_, right_, up_, down_, col_, row_;
};

}  // namespace

SolveResult solve(const Region& region, const std::vector<LatticeTile>& tiles, const SolveOptions& options) {
  if (tiles.empty()) throw Error("solve needs at least one tile");
  const std::size_t d = region.dim();
  for (const auto& t : tiles) {
    if (t.dim() != d) throw Error("tile dimension does not match the region");
    if (t.empty()) throw Error("solve needs non-empty tiles");
  }
  SolveResult result;
  const std::uint64_t volume = region.volume();
  const std::uint64_t free_cells = volume - region.holes.size();
  if (free_cells > options.max_cells) {
    result.status = SolveStatus::resource_exhausted;
    result.message = "region has " + std::to_string(free_cells) + " free cells, above the budget of " +
                     std::to_string(options.max_cells);
    return result;
  }

  std::vector<int> column_of(volume, 0);
  for (const auto& h : region.holes) column_of[region.index(h)] = -1;
  int columns = 0;
  for (auto& c : column_of) {
    if (c == 0) c = columns++;
    else c = -1;
  }

  // Enumerate every admissible placement in (tile id, offset) order.
  std::vector<Placement> rows;
  ExactCover matrix(static_cast<std::size_t>(columns));
  std::uint64_t entries = 0;
  std::vector<int> cols;
  std::vector<bool> used(volume);
  for (std::size_t tid = 0; tid < tiles.size(); ++tid) {
    const auto& tile = tiles[tid];
    Point lo(d), hi(d);
    if (region.mode == RegionMode::torus) {
      for (std::size_t k = 0; k < d; ++k) hi[k] = region.dims[k] - 1;
    } else {
      const BoundingBox bb = tile.bounds();
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = -bb.lo[k];
        hi[k] = region.dims[k] - 1 - bb.hi[k];
      }
    }
    for (const auto& offset : box(lo, hi)) {
      auto cells = placed_cells(region, tile, offset);
      if (!cells) continue;
      cols.clear();
      bool ok = true;
      for (const auto& p : *cells) {
        const auto idx = region.index(p);
        if (column_of[idx] < 0 || used[idx]) {
          ok = false;
          break;
        }
        used[idx] = true;
        cols.push_back(column_of[idx]);
      }
      for (const auto& p : *cells) used[region.index(p)] = false;
      if (!ok) continue;
      entries += cols.size();
      if (entries > options.max_matrix_entries) {
        result.status = SolveStatus::resource_exhausted;
        result.message = "placement matrix exceeds " + std::to_string(options.max_matrix_entries) + " entries";
        return result;
      }
      matrix.add_row(static_cast<int>(rows.size()), cols);
      rows.push_back({tid, offset});
    }
  }

  try {
    auto chosen = matrix.search(options.max_nodes, result.nodes);
    if (!chosen) {
      result.status = SolveStatus::unsat;
      return result;
    }
    TilingCertificate cert{region, tiles, {}};
    std::sort(chosen->begin(), chosen->end());
    for (int r : *chosen) cert.placements.push_back(rows[static_cast<std::size_t>(r)]);
    result.status = SolveStatus::sat;
    result.certificate = std::move(cert);
  } catch (const ResourceError& e) {
    result.status = SolveStatus::resource_exhausted;
    result.message = e.what();
  }
  return result;
}

VerifyResult verify(const TilingCertificate& cert) {
  const Region& region = cert.region;
  VerifyResult out;
  auto fail = [&out](std::string why) {
    out.ok = false;
    out.violation = std::move(why);
    return out;
  };
  constexpr std::uint8_t kHole = 2;
  std::vector<std::uint8_t> count(region.volume(), 0);
  for (const auto& h : region.holes) count[region.index(h)] = kHole;
  for (std::size_t i = 0; i < cert.placements.size(); ++i) {
    const auto& pl = cert.placements[i];
    if (pl.tile_id >= cert.tiles.size()) return fail("placement " + std::to_string(i) + " names an unknown tile");
    const auto& tile = cert.tiles[pl.tile_id];
    if (tile.dim() != region.dim() || pl.offset.dim() != region.dim()) {
      return fail("placement " + std::to_string(i) + " has the wrong dimension");
    }
    auto cells = placed_cells(region, tile, pl.offset);
    if (!cells) return fail("placement " + std::to_string(i) + " leaves the region");
    for (const auto& p : *cells) {
      auto& c = count[region.index(p)];
      if (c == kHole) return fail("placement " + std::to_string(i) + " covers the hole " + p.str());
      if (c == 1) return fail("placement " + std::to_string(i) + " covers " + p.str() + " twice");
      c = 1;
    }
  }
  for (std::uint64_t i = 0; i < count.size(); ++i) {
    if (count[i] == 0) return fail("cell " + region.point_at(i).str() + " is not covered");
  }
  return out;
}

}  // namespace tileforge
