#include "tileforge/brute_force.hpp"

namespace tileforge::oracle {

namespace {

struct Search {
  const Region& region;
  const std::vector<LatticeTile>& tiles;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  std::vector<char> filled;  // row-major, last axis fastest
  std::vector<long> stride;

  long rank(const std::vector<long>& p) const {
    long r = 0;
    for (std::size_t k = 0; k < p.size(); ++k) r += p[k] * stride[k];
    return r;
  }

  // Rank of cell + offset, or -1 when it leaves a bounded box.
  long target(const Point& cell, const std::vector<long>& offset) const {
    std::vector<long> p(offset.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      long v = cell[k] + offset[k];
      const long e = region.dims[k];
      if (region.mode == RegionMode::torus) {
        v %= e;
        if (v < 0) v += e;
      } else if (v < 0 || v >= e) {
        return -1;
      }
      p[k] = v;
    }
    return rank(p);
  }

  bool run(std::size_t from) {
    while (from < filled.size() && filled[from]) ++from;
    if (from == filled.size()) return true;
    std::vector<long> at(region.dims.size());
    long rest = static_cast<long>(from);
    for (std::size_t k = 0; k < at.size(); ++k) {
      at[k] = rest / stride[k];
      rest %= stride[k];
    }
    std::vector<long> marked;
    for (const auto& tile : tiles) {
      for (const auto& anchor : tile) {
        std::vector<long> offset(at.size());
        for (std::size_t k = 0; k < at.size(); ++k) offset[k] = at[k] - anchor[k];
        marked.clear();
        bool ok = true;
        for (const auto& c : tile) {
          const long r = target(c, offset);
          if (r < 0 || filled[static_cast<std::size_t>(r)]) {
            ok = false;
            break;
          }
          filled[static_cast<std::size_t>(r)] = 1;
          marked.push_back(r);
        }
        if (ok) {
          if (++nodes > max_nodes) throw ResourceError("brute force node budget exhausted");
          if (run(from + 1)) return true;
        }
        for (long r : marked) filled[static_cast<std::size_t>(r)] = 0;
      }
    }
    return false;
  }
};

}  // namespace

bool brute_force_tileable(const Region& region, const std::vector<LatticeTile>& tiles, std::uint64_t max_nodes) {
  Search s{region, tiles, max_nodes, 0, {}, {}};
  const std::size_t d = region.dims.size();
  s.stride.assign(d, 1);
  for (std::size_t k = d - 1; k > 0; --k) s.stride[k - 1] = s.stride[k] * region.dims[k];
  s.filled.assign(static_cast<std::size_t>(s.stride[0] * region.dims[0]), 0);
  for (const auto& h : region.holes) {
    std::vector<long> p(h.coords().begin(), h.coords().end());
    s.filled[static_cast<std::size_t>(s.rank(p))] = 1;
  }
  return s.run(0);
}

}  // namespace tileforge::oracle
