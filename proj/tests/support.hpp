#pragma once

#include <queue>
#include <random>
#include <set>
#include <vector>

#include "tileforge/lattice.hpp"

namespace testing {

using tileforge::LatticeTile;
using tileforge::Point;

// Random cell set inside [0, span)^dim.
inline LatticeTile random_cells(std::mt19937_64& rng, std::size_t dim, int span, int count) {
  std::uniform_int_distribution<int> coord(0, span - 1);
  std::vector<Point> cells;
  for (int i = 0; i < count; ++i) {
    Point p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = coord(rng);
    cells.push_back(p);
  }
  return LatticeTile::from_unsorted(dim, cells);
}

// Flood fill over std::set; independent of the library's bitmap search.
inline bool bfs_connected(const LatticeTile& t) {
  std::set<Point> cells(t.begin(), t.end());
  std::set<Point> seen{*cells.begin()};
  std::queue<Point> todo;
  todo.push(*cells.begin());
  while (!todo.empty()) {
    const Point p = todo.front();
    todo.pop();
    for (std::size_t k = 0; k < t.dim(); ++k) {
      for (int s : {-1, 1}) {
        Point q = p;
        q[k] += s;
        if (cells.count(q) && seen.insert(q).second) todo.push(q);
      }
    }
  }
  return seen.size() == cells.size();
}

}  // namespace testing
