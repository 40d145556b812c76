#include <doctest.h>

#include "tileforge/brute_force.hpp"
#include "tileforge/samples.hpp"
#include "tileforge/solver.hpp"

using namespace tileforge;

namespace {

Region torus1(int len, std::vector<int> holes) {
  std::vector<Point> cells;
  for (int h : holes) cells.push_back(Point{h});
  return Region(RegionMode::torus, {len}, LatticeTile(1, cells));
}

}  // namespace

TEST_CASE("regions validate their holes and rank cells row-major") {
  CHECK_THROWS_AS(Region(RegionMode::torus, {0}), Error);
  CHECK_THROWS_AS(Region(RegionMode::torus, {3}, LatticeTile(1, {Point{3}})), Error);
  CHECK_THROWS_AS(Region(RegionMode::torus, {3, 3}, LatticeTile(1)), Error);
  const Region r(RegionMode::bounded, {2, 3, 4});
  CHECK(r.volume() == 24u);
  CHECK(r.index(Point{0, 0, 1}) == 1u);
  CHECK(r.index(Point{1, 0, 0}) == 12u);
  for (std::uint64_t i = 0; i < r.volume(); ++i) CHECK(r.index(r.point_at(i)) == i);
}

TEST_CASE("one-dimensional blocker instances") {
  const auto sat = solve(torus1(6, {1, 4}), {line({0, 1})});
  REQUIRE(sat.sat());
  CHECK(verify(*sat.certificate).ok);
  CHECK(sat.certificate->placements.size() == 2u);
  CHECK(solve(torus1(6, {0, 2, 3, 5}), {line({0, 1})}).unsat());
}

TEST_CASE("two-dimensional parity and bounded boxes") {
  const LatticeTile domino(2, {Point{0, 0}, Point{1, 0}});
  const auto r = solve(Region(RegionMode::torus, {2, 2}), {domino});
  REQUIRE(r.sat());
  CHECK(r.certificate->placements.size() == 2u);
  CHECK(solve(Region(RegionMode::bounded, {3, 3}), {domino, LatticeTile(2, {Point{0, 0}, Point{0, 1}})}).unsat());
  CHECK(solve(Region(RegionMode::bounded, {1, 2}), {domino}).unsat());
}

TEST_CASE("empty remaining region is SAT with no placements") {
  const auto r = solve(torus1(2, {0, 1}), {line({0, 1})});
  REQUIRE(r.sat());
  CHECK(r.certificate->placements.empty());
  CHECK(verify(*r.certificate).ok);
}

TEST_CASE("placements that wrap onto themselves are skipped") {
  // {0, 3} on a torus of length 3 would cover one cell twice.
  CHECK(solve(torus1(3, {}), {line({0, 3})}).unsat());
  CHECK(solve(torus1(5, {}), {line({0, 3})}).unsat());
  CHECK(solve(torus1(6, {}), {line({0, 3})}).sat());
}

TEST_CASE("torus search is invariant under reducing the tile") {
  const LatticeTile t(2, {Point{0, 0}, Point{0, 1}, Point{3, 5}, Point{-2, 7}});
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      const std::vector<int> dims{a, b};
      std::vector<Point> cells;
      for (const auto& c : t) cells.push_back(Point{((c[0] % a) + a) % a, ((c[1] % b) + b) % b});
      const auto reduced = LatticeTile::from_unsorted(2, cells);
      if (reduced.size() != t.size()) continue;
      const Region r(RegionMode::torus, dims);
      CHECK(solve(r, {t}).status == solve(r, {reduced}).status);
    }
  }
}

TEST_CASE("budgets report exhaustion, not UNSAT") {
  SolveOptions small;
  small.max_cells = 10;
  const auto r = solve(Region(RegionMode::torus, {4, 4}), {LatticeTile(2, {Point{0, 0}})}, small);
  CHECK(r.status == SolveStatus::resource_exhausted);
  CHECK_FALSE(r.message.empty());

  SolveOptions nodes;
  nodes.max_nodes = 3;
  const auto s = solve(Region(RegionMode::torus, {8, 8}), {LatticeTile(2, {Point{0, 0}, Point{1, 0}})}, nodes);
  CHECK(s.status == SolveStatus::resource_exhausted);

  SolveOptions entries;
  entries.max_matrix_entries = 5;
  CHECK(solve(torus1(6, {}), {line({0, 1})}, entries).status == SolveStatus::resource_exhausted);
}

TEST_CASE("solve rejects malformed inputs") {
  CHECK_THROWS_AS(solve(torus1(4, {}), {}), Error);
  CHECK_THROWS_AS(solve(torus1(4, {}), {LatticeTile(2, {Point{0, 0}})}), Error);
  CHECK_THROWS_AS(solve(torus1(4, {}), {LatticeTile(1)}), Error);
}

TEST_CASE("verify catches every kind of bad certificate") {
  const LatticeTile d = line({0, 1});
  TilingCertificate good{torus1(4, {}), {d}, {{0, Point{0}}, {0, Point{2}}}};
  CHECK(verify(good).ok);

  auto dup = good;
  dup.placements.push_back({0, Point{0}});
  CHECK_FALSE(verify(dup).ok);

  auto missing = good;
  missing.placements.pop_back();
  const auto v = verify(missing);
  CHECK_FALSE(v.ok);
  CHECK(v.violation.find("not covered") != std::string::npos);

  TilingCertificate hole{torus1(4, {1}), {d}, {{0, Point{0}}}};
  CHECK(verify(hole).violation.find("hole") != std::string::npos);

  TilingCertificate outside{Region(RegionMode::bounded, {3}), {d}, {{0, Point{2}}}};
  CHECK(verify(outside).violation.find("leaves") != std::string::npos);

  TilingCertificate unknown{torus1(2, {}), {d}, {{4, Point{0}}}};
  CHECK_FALSE(verify(unknown).ok);
}

TEST_CASE("results are deterministic") {
  const auto cases = random_cases(21, 20, 400);
  for (const auto& c : cases) {
    const auto a = solve(c.region, c.tiles);
    const auto b = solve(c.region, c.tiles);
    CHECK(a.status == b.status);
    if (a.sat()) CHECK(a.certificate->placements == b.certificate->placements);
  }
}

TEST_CASE("exact cover agrees with plain enumeration on a random sample") {
  for (const auto& c : random_cases(99, 60, 2000)) {
    const auto r = solve(c.region, c.tiles);
    REQUIRE(r.status != SolveStatus::resource_exhausted);
    CHECK_MESSAGE(r.sat() == oracle::brute_force_tileable(c.region, c.tiles), c.name);
    if (r.sat()) CHECK(verify(*r.certificate).ok);
  }
}

TEST_CASE("placed cells wrap on tori and fail outside boxes") {
  const LatticeTile t = line({0, 2});
  const auto wrapped = placed_cells(torus1(3, {}), t, Point{2});
  REQUIRE(wrapped);
  CHECK((*wrapped)[0] == Point{2});
  CHECK((*wrapped)[1] == Point{1});
  CHECK_FALSE(placed_cells(Region(RegionMode::bounded, {3}), t, Point{2}));
}
