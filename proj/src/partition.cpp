#include "tileforge/partition.hpp"

#include <algorithm>
#include <array>

namespace tileforge {

namespace {

bool in_range(int v, int lo, int hi) { return lo <= v && v <= hi; }

FValue f3(int m, int x, int y, int z) {
  struct Case {
    bool match;
    int value;
  };
  const std::array<Case, 5> cases{{
      {in_range(x, 0, m) && in_range(y, 1, m) && z == 0, y},
      {in_range(x, 1, m) && in_range(y, 0, m) && z == m + 1, x},
      {x == 0 && in_range(y, 1, m) && in_range(z, 1, m), y},
      {in_range(x, 1, m) && y == 0 && in_range(z, 1, m), x},
      {in_range(x, 1, m + 1) && in_range(y, 1, m + 1) && in_range(z, 1, m), z},
  }};
  std::optional<int> value;
  for (const auto& c : cases) {
    if (!c.match) continue;
    if (!value) {
      value = c.value;
    } else if (*value != c.value) {
      throw Error("partition function cases disagree at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(z) + ")");
    }
  }
  if (!value) return {1, true};
  return {*value, false};
}

FValue f_rec(int m, std::array<int, kMaxDim> x, std::size_t n) {
  if (n == 3) return f3(m, x[0], x[1], x[2]);
  if (x[n - 1] <= m) return f_rec(m, x, n - 1);
  // Top layer: the lower-dimensional pattern rotated in the first two axes.
  std::array<int, kMaxDim> r = x;
  r[0] = m + 1 - x[1];
  r[1] = x[0];
  return f_rec(m, r, n - 1);
}

std::vector<Point> cube_points(std::size_t dim, int side) { return cube(dim, side).cells(); }

}  // namespace

FValue f_evaluate(int m, const Point& p) {
  const std::size_t d = p.dim();
  if (d < 3) throw Error("the partition needs dimension >= 3");
  if (m < 1) throw Error("part count m must be positive");
  std::array<int, kMaxDim> x{};
  for (std::size_t k = 0; k < d; ++k) {
    if (!in_range(p[k], 0, m + 1)) throw Error("point " + p.str() + " outside the partition cube");
    x[k] = p[k];
  }
  return f_rec(m, x, d);
}

int CubePartition::label_of(const Point& p) const {
  for (std::size_t k = 0; k < p.dim(); ++k) {
    if (!in_range(p[k], 0, side - 1)) throw Error("point " + p.str() + " outside the partition cube");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].contains(p)) return static_cast<int>(i) + 1;
  }
  throw Error("point " + p.str() + " not covered by any part");
}

CubePartition partition_cube(std::size_t dim, int m) {
  if (dim < 3) throw Error("the partition needs dimension >= 3");
  if (m < 1) throw Error("part count m must be positive");
  CubePartition out;
  out.dim = dim;
  out.m = m;
  out.side = m + 2;
  std::vector<std::vector<Point>> buckets(static_cast<std::size_t>(m));
  std::vector<Point> free;
  for (const auto& p : cube_points(dim, out.side)) {
    FValue v = f_evaluate(m, p);
    buckets[static_cast<std::size_t>(v.label - 1)].push_back(p);
    if (v.free) free.push_back(p);
  }
  for (auto& b : buckets) out.parts.emplace_back(dim, std::move(b));
  out.free_cells = LatticeTile(dim, std::move(free));
  return out;
}

void validate_partition(const CubePartition& part) {
  if (static_cast<int>(part.parts.size()) != part.m) throw Error("wrong number of parts");
  std::size_t total = 0;
  LatticeTile all(part.dim);
  for (const auto& q : part.parts) {
    if (q.dim() != part.dim) throw Error("part dimension mismatch");
    if (all.intersects(q)) throw Error("parts overlap");
    all = all.united(q);
    total += q.size();
  }
  if (all != cube(part.dim, part.side)) throw Error("parts do not cover the cube exactly");
  if (total != all.size()) throw Error("parts overlap");
  if (part.parts[0].intersected(part.free_cells).size() != part.free_cells.size()) {
    throw Error("free cells must belong to the first part");
  }
}

namespace {

// Dense label array over the cube, index = lexicographic rank.
struct LabelGrid {
  std::size_t dim;
  int side;
  std::vector<int> labels;

  explicit LabelGrid(const CubePartition& part) : dim(part.dim), side(part.side) {
    std::size_t volume = 1;
    for (std::size_t k = 0; k < dim; ++k) volume *= static_cast<std::size_t>(side);
    labels.assign(volume, 0);
    for (std::size_t i = 0; i < part.parts.size(); ++i) {
      for (const auto& p : part.parts[i]) labels[index(p)] = static_cast<int>(i) + 1;
    }
  }

  std::size_t index(const Point& p) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dim; ++k) idx = idx * static_cast<std::size_t>(side) + static_cast<std::size_t>(p[k]);
    return idx;
  }

  int at(const Point& p) const {
    for (std::size_t k = 0; k < dim; ++k) {
      if (p[k] < 0 || p[k] >= side) return 0;
    }
    return labels[index(p)];
  }
};

std::optional<AdjacencyFailure> first_missing_pair(const std::vector<bool>& seen, int m,
                                                   std::optional<UnitVector> dir) {
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (!seen[static_cast<std::size_t>((i - 1) * m + (j - 1))]) return AdjacencyFailure{i, j, dir};
    }
  }
  return std::nullopt;
}

}  // namespace

AdjacencyReport check_internal_adjacency(const CubePartition& part) {
  const int m = part.m;
  LabelGrid grid(part);
  std::vector<bool> seen(static_cast<std::size_t>(m * m));
  for (const auto& p : cube_points(part.dim, part.side)) {
    int a = grid.at(p);
    for (const auto& v : signed_axes(part.dim)) {
      int b = grid.at(p + v.as_point(part.dim));
      if (b > 0 && b != a) seen[static_cast<std::size_t>((a - 1) * m + (b - 1))] = true;
    }
  }
  AdjacencyReport report;
  report.failure = first_missing_pair(seen, m, std::nullopt);
  report.ok = !report.failure;
  return report;
}

AdjacencyReport check_external_adjacency(const CubePartition& part) {
  const int m = part.m;
  LabelGrid grid(part);
  const auto points = cube_points(part.dim, part.side);
  AdjacencyReport report;
  for (const auto& v : signed_axes(part.dim)) {
    const Point shift = v.as_point(part.dim).scaled(part.side - 1);
    std::vector<bool> seen(static_cast<std::size_t>(m * m));
    for (const auto& p : points) {
      int b = grid.at(p + shift);
      if (b > 0) seen[static_cast<std::size_t>((grid.at(p) - 1) * m + (b - 1))] = true;
    }
    report.failure = first_missing_pair(seen, m, v);
    if (report.failure) {
      report.ok = false;
      return report;
    }
  }
  return report;
}

DecoratedPartition decorate(const CubePartition& part) {
  const std::size_t d = part.dim;
  const int m = part.m;
  DecoratedPartition out;
  out.dim = d;
  out.m = m;
  out.side = 3 * m + 6;
  std::vector<Point> bumps, dents;
  for (std::size_t k = 0; k < d; ++k) {
    Point bump(d), dent(d);
    for (std::size_t j = 0; j < d; ++j) {
      bump[j] = 1;
      dent[j] = 1;
    }
    bump[k] = -1;
    dent[k] = 3 * m + 5;
    bumps.push_back(bump);
    dents.push_back(dent);
  }
  out.bumps = LatticeTile(d, std::move(bumps));
  out.dents = LatticeTile(d, std::move(dents));
  for (const auto& q : part.parts) out.parts.push_back(inflate(q, 3));
  LatticeTile& first = out.parts.front();
  if (first.intersected(out.dents).size() != out.dents.size()) {
    throw Error("dent cells are not part of the first part");
  }
  if (first.intersects(out.bumps)) throw Error("bump cells already belong to the first part");
  first = first.united(out.bumps).minus(out.dents);
  return out;
}

}  // namespace tileforge
