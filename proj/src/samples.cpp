#include "tileforge/samples.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tileforge/gadgets.hpp"

namespace tileforge {

namespace {

// Rules read off a grid: exactly the pairs it uses.
DominoSet rules_of(const GridAssignment& g, int m) {
  DominoSet r;
  r.m = m;
  for (int x = 0; x < g.px(); ++x) {
    for (int y = 0; y < g.py(); ++y) {
      r.r1.insert({g.at(x, y), g.at(x + 1, y)});
      r.r2.insert({g.at(x, y), g.at(x, y + 1)});
    }
  }
  return r;
}

LatticeTile random_tile(std::mt19937_64& rng, std::size_t dim, int max_cells) {
  std::uniform_int_distribution<int> size_dist(1, max_cells);
  std::uniform_int_distribution<std::size_t> axis_dist(0, dim - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::uniform_int_distribution<int> jump_dist(0, 5);
  const int size = size_dist(rng);
  std::vector<Point> cells{Point(dim)};
  Point at(dim);
  while (static_cast<int>(cells.size()) < size) {
    // Mostly unit steps; an occasional jump of 2 makes disconnected tiles.
    const int len = jump_dist(rng) == 0 ? 2 : 1;
    at[axis_dist(rng)] += sign_dist(rng) ? len : -len;
    if (std::find(cells.begin(), cells.end(), at) == cells.end()) cells.push_back(at);
  }
  return normalize(LatticeTile::from_unsorted(dim, std::move(cells)));
}

}  // namespace

int gadget_modulus(int m) {
  int n = 2 * m + 1;
  while (std::gcd(n, 6) != 1) ++n;
  return n;
}

std::vector<DominoSample> domino_samples() {
  std::vector<DominoSample> out;
  {
    DominoSet r{1, {{1, 1}}, {{1, 1}}};
    out.push_back({"single-value", r, GridAssignment(1, 1, 1), gadget_modulus(1)});
  }
  {
    DominoSet r{2, {{1, 2}, {2, 1}}, {{1, 1}, {2, 2}}};
    out.push_back({"stripes", r, GridAssignment::from_rows({{1}, {2}}), gadget_modulus(2)});
  }
  {
    DominoSet r{3, {{1, 2}, {2, 3}, {3, 1}}, {{1, 1}, {2, 2}, {3, 3}}};
    out.push_back({"cycle-3", r, GridAssignment::from_rows({{1}, {2}, {3}}), gadget_modulus(3)});
  }
  {
    auto g = GridAssignment::from_rows({{1, 2, 3}, {3, 1, 2}});
    out.push_back({"read-off-2x3", rules_of(g, 3), g, gadget_modulus(3)});
  }
  return out;
}

std::array<Triple, 4> sample_forbidden_triples() { return {{{0, 1, 2}, {0, 2, 4}, {0, 3, 1}, {0, 4, 3}}}; }

CyclicTriominoSet sample_triomino_set() {
  constexpr int n = 5;
  const auto forbidden = sample_forbidden_triples();
  CyclicTriominoSet s(n);
  for (std::size_t i = 0; i < 4; ++i) {
    const Triple f = forbidden[i];
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          // Same diagonal orbit iff the differences agree.
          const bool in_orbit = (b - a - (f.b - f.a)) % n == 0 && (c - a - (f.c - f.a)) % n == 0;
          if (!in_orbit) s.rules[i].insert({a, b, c});
        }
      }
    }
  }
  return s;
}

std::vector<SolverCase> one_dim_cases(std::uint64_t seed, int random_count) {
  std::vector<SolverCase> out;
  const LatticeTile domino = line({0, 1});
  for (const auto& v : blocker_truth_table()) {
    LatticeTile holes = blocker(BlockerKind::alpha, v.alpha)
                            .cells.united(blocker(BlockerKind::beta, v.beta).cells)
                            .united(blocker(BlockerKind::gamma, v.gamma).cells);
    out.push_back({"blocker " + std::to_string(v.alpha) + std::to_string(v.beta) + std::to_string(v.gamma),
                   Region(RegionMode::torus, {6}, holes), {domino}});
  }
  for (int n : {5, 7}) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          out.push_back({"tower n=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(c) + ")",
                         tower_region(n, a, b, c), {line({0, n})}});
        }
      }
    }
  }
  const std::vector<std::vector<LatticeTile>> tile_sets{{domino}, {line({0, 2})}, {line({0, 1, 3}), line({0})}};
  for (std::size_t ts = 0; ts < tile_sets.size(); ++ts) {
    for (int len = 1; len <= 8; ++len) {
      for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<Point> holes;
        for (int k = 0; k < len; ++k) {
          if (mask >> k & 1) holes.push_back(Point{k});
        }
        for (auto mode : {RegionMode::torus, RegionMode::bounded}) {
          out.push_back({"short set " + std::to_string(ts) + " len " + std::to_string(len) + " mask " +
                             std::to_string(mask) + (mode == RegionMode::torus ? " torus" : " box"),
                         Region(mode, {len}, LatticeTile(1, holes)), tile_sets[ts]});
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, 42);
  std::uniform_int_distribution<int> count_dist(1, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < random_count; ++i) {
    const int len = len_dist(rng);
    const double density = 0.3 * unit(rng);
    std::vector<Point> holes;
    for (int k = 0; k < len; ++k) {
      if (unit(rng) < density) holes.push_back(Point{k});
    }
    std::vector<LatticeTile> tiles;
    const int count = count_dist(rng);
    for (int t = 0; t < count; ++t) tiles.push_back(random_tile(rng, 1, 3));
    const auto mode = unit(rng) < 0.5 ? RegionMode::torus : RegionMode::bounded;
    out.push_back({"random 1-D #" + std::to_string(i), Region(mode, {len}, LatticeTile(1, holes)), tiles});
  }
  return out;
}

std::vector<SolverCase> random_cases(std::uint64_t seed, int count, int max_cells) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<SolverCase> out;
  for (int i = 0; i < count; ++i) {
    const std::size_t dim = unit(rng) < 0.6 ? 2 : 3;
    const auto mode = unit(rng) < 0.5 ? RegionMode::torus : RegionMode::bounded;
    const std::string name = "random " + std::to_string(dim) + "-D #" + std::to_string(i);
    if (i % 10 == 9) {
      // Large instance tiled by straight bars; extents are multiples of the bar.
      std::uniform_int_distribution<int> bar_dist(2, 4);
      const int bar = bar_dist(rng);
      const int target = std::uniform_int_distribution<int>(std::min(1000, max_cells), max_cells)(rng);
      std::vector<int> dims(dim);
      int side = static_cast<int>(std::pow(static_cast<double>(target), 1.0 / static_cast<double>(dim)));
      side = std::max(bar, side - side % bar);
      for (auto& e : dims) e = side;
      std::vector<int> xs(static_cast<std::size_t>(bar));
      std::iota(xs.begin(), xs.end(), 0);
      std::vector<LatticeTile> tiles;
      for (std::size_t axis = 0; axis < dim; ++axis) {
        std::vector<Point> cells;
        for (int x : xs) {
          Point p(dim);
          p[axis] = x;
          cells.push_back(p);
        }
        tiles.push_back(LatticeTile(dim, std::move(cells)));
      }
      out.push_back({name + " bars", Region(mode, dims), tiles});
      continue;
    }
    std::vector<int> dims(dim);
    for (auto& e : dims) e = std::uniform_int_distribution<int>(1, dim == 2 ? 7 : 4)(rng);
    const double density = 0.25 * unit(rng);
    Region r(mode, dims);
    std::vector<Point> holes;
    for (std::uint64_t k = 0; k < r.volume(); ++k) {
      if (unit(rng) < density) holes.push_back(r.point_at(k));
    }
    std::vector<LatticeTile> tiles;
    const int tile_count = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int t = 0; t < tile_count; ++t) tiles.push_back(random_tile(rng, dim, 4));
    out.push_back({name, Region(mode, dims, LatticeTile(dim, holes)), tiles});
  }
  return out;
}

}  // namespace tileforge
