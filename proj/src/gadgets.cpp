#include "tileforge/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tileforge {

namespace {

int mod(int v, int n) {
  int r = v % n;
  return r < 0 ? r + n : r;
}

void require_coprime_to_6(int n) {
  if (n < 1 || std::gcd(n, 6) != 1) throw Error("tower modulus " + std::to_string(n) + " must satisfy gcd(n, 6) = 1");
}

// Adds `piece` to `acc`, failing loudly on any shared cell.
void add_disjoint(std::vector<Point>& acc, const LatticeTile& piece, const std::string& what) {
  LatticeTile current = LatticeTile::from_unsorted(piece.dim(), acc);
  if (current.intersects(piece)) {
    const auto common = current.intersected(piece);
    throw Error("tower overlap while adding " + what + " at " + common.cells().front().str());
  }
  acc.insert(acc.end(), piece.begin(), piece.end());
}

}  // namespace

const char* to_string(BlockerKind kind) {
  switch (kind) {
    case BlockerKind::alpha:
      return "alpha";
    case BlockerKind::beta:
      return "beta";
    case BlockerKind::gamma:
      return "gamma";
  }
  return "?";
}

Blocker blocker(BlockerKind kind, bool on) {
  switch (kind) {
    case BlockerKind::alpha:
      return {kind, on, on ? line({0, 5}) : LatticeTile(1)};
    case BlockerKind::beta:
      return {kind, on, on ? LatticeTile(1) : line({1, 4})};
    case BlockerKind::gamma:
      return {kind, on, on ? line({2, 3}) : LatticeTile(1)};
  }
  throw Error("unknown blocker kind");
}

LatticeTile domino_tile() { return line({0, 1}); }

std::vector<BlockerVerdict> blocker_truth_table() {
  std::vector<BlockerVerdict> out;
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) {
      for (int k = 0; k <= 1; ++k) {
        LatticeTile holes = blocker(BlockerKind::alpha, i)
                                .cells.united(blocker(BlockerKind::beta, j).cells)
                                .united(blocker(BlockerKind::gamma, k).cells);
        const auto res = solve(Region(RegionMode::torus, {6}, holes), {domino_tile()});
        if (res.status == SolveStatus::resource_exhausted) throw ResourceError(res.message);
        out.push_back({i, j, k, res.sat()});
      }
    }
  }
  return out;
}

Tower tower(BlockerKind kind, int n) {
  require_coprime_to_6(n);
  std::vector<Point> cells;
  for (int i = 0; i < n; ++i) {
    const Blocker b = blocker(kind, i == 0);
    add_disjoint(cells, b.cells.scaled(n).translated(Point{6 * i}), std::string(to_string(kind)) + " blocker");
  }
  return {kind, n, LatticeTile(1, std::move(cells))};
}

Region tower_region(int n, int a, int b, int c) {
  require_coprime_to_6(n);
  const int period = 6 * n;
  std::vector<Point> holes;
  const std::array<std::pair<BlockerKind, int>, 3> parts{{{BlockerKind::alpha, a}, {BlockerKind::beta, b}, {BlockerKind::gamma, c}}};
  for (const auto& [kind, shift] : parts) {
    for (const auto& p : tower(kind, n).cells) holes.push_back(Point{mod(p[0] + 6 * shift, period)});
  }
  return Region(RegionMode::torus, {period}, LatticeTile(1, std::move(holes)));
}

bool tower_check(int n, int a, int b, int c) {
  const auto res = solve(tower_region(n, a, b, c), {line({0, n})});
  if (res.status == SolveStatus::resource_exhausted) throw ResourceError(res.message);
  return res.sat();
}

std::array<std::vector<Triple>, 4> representatives(const CyclicTriominoSet& s) {
  if (!validate_cyclic(s)) throw Error("triomino set is not closed under diagonal shifts");
  const int n = s.n;
  std::array<std::vector<Triple>, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    TripleSet covered(n);
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const Triple t{0, b, c};
        if (s.rules[i].contains(t)) continue;
        out[i].push_back(t);
        for (int k = 0; k < n; ++k) {
          const Triple shifted{k, (b + k) % n, (c + k) % n};
          if (covered.contains(shifted) || s.rules[i].contains(shifted)) {
            throw std::logic_error("representative orbits overlap");
          }
          covered.insert(shifted);
        }
      }
    }
    if (covered.size() + s.rules[i].size() != static_cast<std::size_t>(n) * n * n) {
      throw std::logic_error("representatives do not cover the complement");
    }
  }
  return out;
}

LatticeTile ring() {
  std::vector<Point> cells;
  for (int x = -1; x <= 1; ++x) {
    for (int y = -1; y <= 1; ++y) {
      if (x != 0 || y != 0) cells.push_back(Point{x, y});
    }
  }
  return LatticeTile(2, std::move(cells));
}

LatticeTile tower_piece(int q, int i, int j, int n, int m) {
  BlockerKind kind;
  Point offset;
  switch (q) {
    case 0:
      kind = BlockerKind::alpha;
      offset = Point{3 * i - 1, 2, -6 * j};
      break;
    case 1:
    case 5:
      kind = BlockerKind::beta;
      offset = Point{3 * i - 3 * m - 3, 2, -6 * j};
      break;
    case 2:
      kind = BlockerKind::gamma;
      offset = Point{3 * i - 1, -3, -6 * j};
      break;
    case 3:
      kind = BlockerKind::beta;
      offset = Point{3 * i + 3 * m + 1, 2, -6 * j};
      break;
    case 4:
      kind = BlockerKind::gamma;
      offset = Point{3 * i - 1, 7, -6 * j};
      break;
    default:
      throw Error("tower piece index must be in 0..5");
  }
  return product(ring(), tower(kind, n).cells).translated(offset);
}

GadgetSet build_gadgets(const CyclicTriominoSet& s) {
  require_coprime_to_6(s.n);
  const auto reps = representatives(s);
  GadgetSet g;
  g.n = s.n;
  for (int grp = 1; grp <= 4; ++grp) {
    for (const auto& t : reps[static_cast<std::size_t>(grp - 1)]) {
      g.layout.push_back({static_cast<int>(g.layout.size()) + 1, grp, t});
    }
  }
  g.m = static_cast<int>(g.layout.size());
  const int n = g.n;
  const int m = g.m;

  g.filler = product(ring(), line({0, n}));

  LatticeTile carved(3);
  for (int i = 0; i < m; ++i) {
    const LatticeTile pole = product(ring(), box(Point{0}, Point{6 * n - 1})).translated(Point{3 * i + 2, 2, 0});
    carved = carved.united(pole);
  }
  g.empty_brick = box(Point{0, 0, 0}, Point{3 * m + 1, 4, 6 * n - 1}).minus(carved);

  std::vector<Point> cells(g.empty_brick.begin(), g.empty_brick.end());
  for (const auto& slot : g.layout) {
    const int i = slot.index;
    const std::string where = "pole " + std::to_string(i);
    add_disjoint(cells, tower_piece(0, i, slot.triple.a, n, m), where + " (own alpha)");
    add_disjoint(cells, tower_piece(slot.group, i, slot.triple.b, n, m), where + " (first neighbour)");
    add_disjoint(cells, tower_piece(slot.group + 1, i, slot.triple.c, n, m), where + " (second neighbour)");
  }
  g.brick = LatticeTile(3, std::move(cells));
  return g;
}

GadgetSet decorate_gadgets(GadgetSet g) {
  const int n = g.n;
  const int m = g.m;
  std::vector<Point> bumps, dents;
  for (int i = 0; i < n; ++i) {
    bumps.push_back(Point{-1, 1, 1 + 18 * i});
    bumps.push_back(Point{1, -1, 1 + 18 * i});
    dents.push_back(Point{9 * m + 5, 1, 1 + 18 * i});
    dents.push_back(Point{1, 14, 1 + 18 * i});
  }
  bumps.push_back(Point{1, 1, -1});
  dents.push_back(Point{1, 1, 18 * n - 1});
  g.bumps3 = LatticeTile(3, std::move(bumps));
  g.dents3 = LatticeTile(3, std::move(dents));

  const LatticeTile big = inflate(g.brick, 3);
  if (big.intersects(g.bumps3)) {
    throw Error("bump cell " + big.intersected(g.bumps3).cells().front().str() + " collides with the brick");
  }
  const LatticeTile present = big.intersected(g.dents3);
  if (present.size() != g.dents3.size()) throw Error("dent cell missing from the scaled brick");
  g.brick3 = big.united(g.bumps3).minus(g.dents3);
  g.filler3 = inflate(g.filler, 3);
  return g;
}

std::vector<Point> brick_offsets(const GadgetSet& g, const GridAssignment& t) {
  std::vector<Point> out;
  for (int x = 0; x < t.px(); ++x) {
    for (int y = 0; y < t.py(); ++y) {
      out.push_back(Point{g.brick_width() * x, GadgetSet::brick_depth * y, 6 * t.at(x, y)});
    }
  }
  return out;
}

Region pole_column(const GadgetSet& g, const std::vector<Point>& offsets, int cx, int cy) {
  const int period = g.column_height();
  const auto ring_cells = ring().cells();
  std::vector<std::vector<int>> heights(ring_cells.size());
  for (const auto& off : offsets) {
    for (const auto& c : g.brick) {
      const Point p = c + off;
      const Point rel{p[0] - cx, p[1] - cy};
      auto it = std::lower_bound(ring_cells.begin(), ring_cells.end(), rel);
      if (it == ring_cells.end() || *it != rel) continue;
      heights[static_cast<std::size_t>(it - ring_cells.begin())].push_back(mod(p[2], period));
    }
  }
  for (auto& h : heights) std::sort(h.begin(), h.end());
  for (const auto& h : heights) {
    if (h != heights.front()) throw Error("pole column is not uniform around its ring");
  }
  const auto& z = heights.front();
  if (std::adjacent_find(z.begin(), z.end()) != z.end()) throw Error("bricks overlap inside a pole column");
  std::vector<Point> holes;
  for (int v : z) holes.push_back(Point{v});
  return Region(RegionMode::torus, {period}, LatticeTile(1, std::move(holes)));
}

TilingCertificate realize_tiling(const CyclicTriominoSet& s, const GadgetSet& g, const GridAssignment& t, bool scaled) {
  if (s.n != g.n) throw Error("gadget set and triomino set disagree on n");
  for (const auto& col : t.values()) {
    for (int v : col) {
      if (v < 0 || v >= s.n) throw Error("grid value " + std::to_string(v) + " outside Z_" + std::to_string(s.n));
    }
  }
  if (scaled && (!g.brick3 || !g.filler3)) throw Error("scaled realization needs decorated gadgets");

  const int n = g.n;
  const int period = g.column_height();
  const Region torus(RegionMode::torus, {g.brick_width() * t.px(), GadgetSet::brick_depth * t.py(), period});
  const auto offsets = brick_offsets(g, t);

  // Occupancy of the bricks alone.
  std::vector<std::uint8_t> occupied(torus.volume(), 0);
  for (const auto& off : offsets) {
    for (const auto& c : g.brick) {
      auto& cell = occupied[torus.index(wrap(c + off, torus.dims))];
      if (cell) throw Error("bricks overlap at " + wrap(c + off, torus.dims).str());
      cell = 1;
    }
  }

  const LatticeTile nd = line({0, n});
  const auto ring_cells = ring().cells();
  std::vector<Placement> fillers;
  for (int x = 0; x < t.px(); ++x) {
    for (int y = 0; y < t.py(); ++y) {
      for (const auto& slot : g.layout) {
        const auto centre = g.pole_center(slot.index);
        const int cx = g.brick_width() * x + centre[0];
        const int cy = GadgetSet::brick_depth * y + centre[1];
        std::vector<Point> holes;
        for (int z = 0; z < period; ++z) {
          const auto first = occupied[torus.index(wrap(Point{cx + ring_cells[0][0], cy + ring_cells[0][1], z}, torus.dims))];
          for (const auto& rc : ring_cells) {
            if (occupied[torus.index(wrap(Point{cx + rc[0], cy + rc[1], z}, torus.dims))] != first) {
              throw Error("pole column is not uniform around its ring");
            }
          }
          if (first) holes.push_back(Point{z});
        }
        const auto res = solve(Region(RegionMode::torus, {period}, LatticeTile(1, std::move(holes))), {nd});
        if (!res.sat()) {
          const auto u = triomino_step(slot.group);
          const auto w = triomino_step(slot.group + 1);
          std::ostringstream os;
          os << "column at board cell (" << x << "," << y << ") pole " << slot.index << " is not fillable: triple ("
             << t.at(x, y) << "," << t.at(x + u[0], y + u[1]) << "," << t.at(x + w[0], y + w[1]) << ") violates S"
             << slot.group;
          throw Error(os.str());
        }
        for (const auto& pl : res.certificate->placements) {
          fillers.push_back({1, Point{cx, cy, pl.offset[0]}});
        }
      }
    }
  }

  TilingCertificate cert;
  if (!scaled) {
    cert.region = torus;
    cert.tiles = {g.brick, g.filler};
    for (const auto& off : offsets) cert.placements.push_back({0, off});
    cert.placements.insert(cert.placements.end(), fillers.begin(), fillers.end());
  } else {
    cert.region = Region(RegionMode::torus, {3 * torus.dims[0], 3 * torus.dims[1], 3 * torus.dims[2]});
    cert.tiles = {*g.brick3, *g.filler3};
    for (const auto& off : offsets) cert.placements.push_back({0, off.scaled(3)});
    for (const auto& f : fillers) cert.placements.push_back({1, f.offset.scaled(3)});
  }
  for (auto& pl : cert.placements) pl.offset = wrap(pl.offset, cert.region.dims);
  if (auto v = verify(cert); !v) throw std::logic_error("realized certificate fails verification: " + v.violation);
  return cert;
}

std::optional<Point> find_plate(const Region& region) {
  if (region.dim() != 3) throw Error("plates live in three dimensions");
  auto free = [&region](const Point& p) {
    if (region.mode == RegionMode::bounded && !region.in_box(p)) return false;
    return !region.holes.contains(region.mode == RegionMode::torus ? wrap(p, region.dims) : p);
  };
  for (std::uint64_t i = 0; i < region.volume(); ++i) {
    const Point c = region.point_at(i);
    bool ok = true;
    for (int dx = -1; dx <= 1 && ok; ++dx) {
      for (int dy = -1; dy <= 1 && ok; ++dy) ok = free(Point{c[0] + dx, c[1] + dy, c[2]});
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace tileforge
