#include <doctest.h>

#include <set>

#include "tileforge/gadgets.hpp"
#include "tileforge/samples.hpp"

using namespace tileforge;

namespace {

std::vector<int> coords(const LatticeTile& t) {
  std::vector<int> out;
  for (const auto& c : t) out.push_back(c[0]);
  return out;
}

// All grids on a px x py torus over Z_n that solve s.
std::vector<GridAssignment> all_solutions(const CyclicTriominoSet& s, int px, int py) {
  std::vector<GridAssignment> out;
  const int cells = px * py;
  int total = 1;
  for (int i = 0; i < cells; ++i) total *= s.n;
  for (int code = 0; code < total; ++code) {
    GridAssignment g(px, py);
    int rest = code;
    for (int x = 0; x < px; ++x) {
      for (int y = 0; y < py; ++y) {
        g.set(x, y, rest % s.n);
        rest /= s.n;
      }
    }
    if (check_triomino(s, g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("blocker cells") {
  CHECK(coords(blocker(BlockerKind::alpha, true).cells) == std::vector<int>{0, 5});
  CHECK(blocker(BlockerKind::alpha, false).cells.empty());
  CHECK(coords(blocker(BlockerKind::beta, false).cells) == std::vector<int>{1, 4});
  CHECK(blocker(BlockerKind::beta, true).cells.empty());
  CHECK(blocker(BlockerKind::gamma, false).cells.empty());
  CHECK(coords(blocker(BlockerKind::gamma, true).cells) == std::vector<int>{2, 3});
}

TEST_CASE("blocker truth table") {
  const auto table = blocker_truth_table();
  REQUIRE(table.size() == 8u);
  for (const auto& v : table) {
    // Remaining cells of the 6-cycle, paired by dominoes by hand.
    std::set<int> free{0, 1, 2, 3, 4, 5};
    if (v.alpha) free.erase(0), free.erase(5);
    if (!v.beta) free.erase(1), free.erase(4);
    if (v.gamma) free.erase(2), free.erase(3);
    bool pairable = free.size() % 2 == 0;
    for (int c : free) pairable = pairable && (free.count((c + 1) % 6) || free.count((c + 5) % 6));
    CHECK(v.tileable == pairable);
    CHECK(v.tileable == !(v.alpha && v.beta && v.gamma));
  }
}

TEST_CASE("tower cells") {
  CHECK(coords(tower(BlockerKind::alpha, 5).cells) == std::vector<int>{0, 25});
  CHECK(coords(tower(BlockerKind::beta, 5).cells) == std::vector<int>{11, 17, 23, 26, 29, 32, 38, 44});
  CHECK(coords(tower(BlockerKind::gamma, 5).cells) == std::vector<int>{10, 15});
  CHECK_THROWS_AS(tower(BlockerKind::alpha, 4), Error);
  CHECK_THROWS_AS(tower(BlockerKind::gamma, 9), Error);
  for (int n : {5, 7, 11}) {
    std::set<int> residues;
    for (auto kind : {BlockerKind::alpha, BlockerKind::beta, BlockerKind::gamma}) {
      for (int c : coords(tower(kind, n).cells)) CHECK(residues.insert(c % (6 * n)).second);
    }
  }
}

TEST_CASE("tower criterion examples") {
  CHECK_FALSE(tower_check(5, 0, 0, 0));
  CHECK(tower_check(5, 1, 0, 2));
  CHECK_FALSE(tower_check(7, 3, 10, 17));
  CHECK(tower_check(7, 3, 10, 16));
  CHECK(tower_region(5, 0, 0, 0).dims == std::vector<int>{30});
}

TEST_CASE("representatives pick the first-coordinate-zero triples of the complement") {
  CyclicTriominoSet s(5);
  for (std::size_t i = 0; i < 4; ++i) {
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        for (int c = 0; c < 5; ++c) {
          const bool forbidden = i == 0 && (b - a + 5) % 5 == 1 && (c - a + 5) % 5 == 2;
          if (!forbidden) s.rules[i].insert({a, b, c});
        }
      }
    }
  }
  const auto k = representatives(s);
  CHECK(k[0] == std::vector<Triple>{{0, 1, 2}});
  CHECK(k[1].empty());

  const auto sample = representatives(sample_triomino_set());
  const auto forbidden = sample_forbidden_triples();
  for (std::size_t i = 0; i < 4; ++i) CHECK(sample[i] == std::vector<Triple>{forbidden[i]});

  CyclicTriominoSet broken(3);
  broken.rules[0].insert({0, 0, 0});
  CHECK_THROWS_AS(representatives(broken), Error);
}

TEST_CASE("ring and filler") {
  CHECK(ring().size() == 8u);
  CHECK_FALSE(ring().contains(Point{0, 0}));
  const auto g = build_gadgets(sample_triomino_set());
  CHECK(g.filler.size() == 16u);
  CHECK_FALSE(is_connected(g.filler));
  CHECK(g.filler == product(ring(), line({0, 5})));
}

TEST_CASE("empty brick of the sample set") {
  const auto g = build_gadgets(sample_triomino_set());
  const int n = g.n, m = g.m;
  CHECK(n == 5);
  CHECK(m == 4);
  CHECK(g.empty_brick.bounds().extent() == Point{14, 5, 30});
  // Enumerate the cuboid and drop the ring columns by hand.
  std::size_t count = 0;
  for (int x = 0; x <= 3 * m + 1; ++x) {
    for (int y = 0; y <= 4; ++y) {
      bool in_ring = false;
      for (int i = 0; i < m; ++i) {
        const int dx = x - (3 * i + 2), dy = y - 2;
        in_ring = in_ring || (std::abs(dx) <= 1 && std::abs(dy) <= 1 && (dx || dy));
      }
      if (!in_ring) count += 6 * n;
      for (int z = 0; z < 6 * n; ++z) CHECK(g.empty_brick.contains(Point{x, y, z}) == !in_ring);
    }
  }
  CHECK(count == 1140u);
  CHECK(g.empty_brick.size() == 1140u);
}

TEST_CASE("tower pieces and the brick") {
  const auto g = build_gadgets(sample_triomino_set());
  const int n = g.n, m = g.m;
  // T_{2,i,j} = O x gamma_T + (3i-1, -3, -6j), built here cell by cell.
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<Point> cells;
      for (const auto& r : ring()) {
        for (int z : {2 * n, 3 * n}) cells.push_back(Point{r[0] + 3 * i - 1, r[1] - 3, z - 6 * j});
      }
      CHECK(tower_piece(2, i, j, n, m) == LatticeTile::from_unsorted(3, cells));
    }
  }
  CHECK(tower_piece(5, 2, 1, n, m) == tower_piece(1, 2, 1, n, m));
  CHECK_THROWS_AS(tower_piece(6, 1, 0, n, m), Error);

  REQUIRE(g.layout.size() == 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(g.layout[i].index == static_cast<int>(i) + 1);
    CHECK(g.layout[i].group == static_cast<int>(i) + 1);
  }
  CHECK(g.brick.minus(g.empty_brick).size() == g.brick.size() - g.empty_brick.size());
  CHECK(g.empty_brick.minus(g.brick).empty());
  const std::size_t per_pole = 8 * (2 + 2 * (n - 1) + 2);
  CHECK(g.brick.size() == g.empty_brick.size() + static_cast<std::size_t>(m) * per_pole);
}

TEST_CASE("all-allowed triomino set gives a plain cuboid") {
  CyclicTriominoSet s(5);
  for (auto& r : s.rules) {
    for (int a = 0; a < 5; ++a) {
      for (int b = 0; b < 5; ++b) {
        for (int c = 0; c < 5; ++c) r.insert({a, b, c});
      }
    }
  }
  const auto g = build_gadgets(s);
  CHECK(g.m == 0);
  CHECK(g.brick == box(Point{0, 0, 0}, Point{1, 4, 29}));
  const auto cert = realize_tiling(s, g, GridAssignment::from_rows({{0, 3}, {1, 4}}));
  CHECK(verify(cert).ok);
  CHECK(cert.placements.size() == 4u);
}

TEST_CASE("decorated gadgets") {
  const auto base = build_gadgets(sample_triomino_set());
  const auto g = decorate_gadgets(base);
  const int n = g.n, m = g.m;
  REQUIRE(g.brick3);
  REQUIRE(g.filler3);
  CHECK(g.brick3->size() == 27 * base.brick.size());
  CHECK(g.filler3->size() == 432u);
  CHECK_FALSE(is_connected(*g.filler3));
  CHECK_FALSE(is_connected(*g.brick3));
  for (int i = 0; i < 3; ++i) CHECK(g.brick3->contains(Point{-1, 1, 1 + 18 * i}));
  for (int i = 0; i < n; ++i) {
    CHECK(g.brick3->contains(Point{1, -1, 1 + 18 * i}));
    CHECK_FALSE(g.brick3->contains(Point{9 * m + 5, 1, 1 + 18 * i}));
    CHECK_FALSE(g.brick3->contains(Point{1, 14, 1 + 18 * i}));
  }
  CHECK(g.brick3->contains(Point{1, 1, -1}));
  CHECK_FALSE(g.brick3->contains(Point{1, 1, 18 * n - 1}));

  // The -x bumps of the right neighbour land in this brick's +x dents.
  const Point step{3 * (3 * m + 2), 0, 0};
  for (int i = 0; i < n; ++i) {
    const Point bump = Point{-1, 1, 1 + 18 * i} + step;
    CHECK(bump == Point{9 * m + 5, 1, 1 + 18 * i});
    CHECK(g.brick3->translated(step).contains(bump));
    CHECK_FALSE(g.brick3->contains(bump));
  }
}

TEST_CASE("realizing the constant solution") {
  const auto s = sample_triomino_set();
  const auto g = build_gadgets(s);
  const auto cert = realize_tiling(s, g, GridAssignment(1, 1, 0));
  CHECK(verify(cert).ok);
  CHECK(cert.region.dims == std::vector<int>{14, 5, 30});
  std::size_t bricks = 0, fillers = 0;
  for (const auto& p : cert.placements) (p.tile_id == 0 ? bricks : fillers)++;
  CHECK(bricks == 1u);
  CHECK(fillers == static_cast<std::size_t>(g.m * (2 * g.n - 1)));
  CHECK(bricks * g.brick.size() + fillers * g.filler.size() == cert.region.volume());
}

TEST_CASE("every small-torus solution realizes") {
  const auto s = sample_triomino_set();
  const auto g = build_gadgets(s);
  int realized = 0;
  for (const auto& [px, py] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (const auto& t : all_solutions(s, px, py)) {
      const auto cert = realize_tiling(s, g, t);
      CHECK(verify(cert).ok);
      CHECK(cert.region.dims == std::vector<int>{14 * px, 5 * py, 30});
      ++realized;
    }
  }
  CHECK(realized > 5 * 4);
}

TEST_CASE("realize refuses grids that break the rules") {
  const auto s = sample_triomino_set();
  const auto g = build_gadgets(s);
  // (0, 1, 2) is forbidden for S_1: T(0,0)=0, T(1,0)=1, T(0,1)=2.
  const auto bad = GridAssignment::from_rows({{0, 2}, {1, 0}});
  REQUIRE_FALSE(check_triomino(s, bad));
  CHECK_THROWS_AS(realize_tiling(s, g, bad), Error);
  CHECK_THROWS_AS(realize_tiling(s, g, GridAssignment(1, 1, 7)), Error);
  CHECK_THROWS_AS(realize_tiling(s, g, GridAssignment(1, 1, 0), true), Error);
}

TEST_CASE("forbidden triples leave an unfillable pole column") {
  const auto s = sample_triomino_set();
  const auto g = build_gadgets(s);
  const int n = g.n;
  for (const auto& slot : g.layout) {
    const auto u = triomino_step(slot.group);
    const auto w = triomino_step(slot.group + 1);
    auto brick_at = [&](std::array<int, 2> cell, int value) {
      return Point{g.brick_width() * cell[0], GadgetSet::brick_depth * cell[1], 6 * value};
    };
    const auto centre = g.pole_center(slot.index);
    for (int k = 0; k < n; ++k) {
      const Triple t{slot.triple.a + k, slot.triple.b + k, slot.triple.c + k};
      const std::vector<Point> bad{brick_at({0, 0}, t.a), brick_at(u, t.b), brick_at(w, t.c)};
      CHECK(solve(pole_column(g, bad, centre[0], centre[1]), {line({0, n})}).unsat());
      const std::vector<Point> fine{brick_at({0, 0}, t.a), brick_at(u, t.b + 1), brick_at(w, t.c)};
      CHECK(solve(pole_column(g, fine, centre[0], centre[1]), {line({0, n})}).sat());
    }
  }
}

TEST_CASE("plates in bounded regions") {
  CHECK(find_plate(Region(RegionMode::bounded, {3, 3, 1})) == Point{1, 1, 0});
  CHECK_FALSE(find_plate(Region(RegionMode::bounded, {2, 9, 4})));
  const Region holed(RegionMode::bounded, {3, 3, 2}, LatticeTile(3, {Point{0, 0, 0}, Point{2, 2, 1}}));
  CHECK_FALSE(find_plate(holed));
  CHECK_THROWS_AS(find_plate(Region(RegionMode::bounded, {3, 3})), Error);
}
