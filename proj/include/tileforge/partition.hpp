#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tileforge/lattice.hpp"

namespace tileforge {

// Parts Q_1..Q_m of the cube {0..m+1}^d, stored 0-based (parts[0] is Q_1).
struct CubePartition {
  std::size_t dim = 3;
  int m = 0;
  int side = 0;  // m + 2
  std::vector<LatticeTile> parts;
  LatticeTile free_cells;  // subset of parts[0]

  // Label (1-based) of a cube point; throws outside the cube.
  int label_of(const Point& p) const;
};

// Scaled-by-3 parts with bumps/dents on the first part; side 3m+6.
struct DecoratedPartition {
  std::size_t dim = 3;
  int m = 0;
  int side = 0;
  std::vector<LatticeTile> parts;
  LatticeTile bumps;  // cells added to parts[0]
  LatticeTile dents;  // cells removed from parts[0]
};

struct FValue {
  int label;
  bool free;
};

// Part label of `p` in the (m+2)-cube of dimension p.dim() >= 3.
FValue f_evaluate(int m, const Point& p);
inline int f_value(int m, const Point& p) { return f_evaluate(m, p).label; }

CubePartition partition_cube(std::size_t dim, int m);

// Throws Error when the parts fail to partition the cube exactly.
void validate_partition(const CubePartition& part);

struct AdjacencyFailure {
  int i;  // 1-based labels, i < j
  int j;
  std::optional<UnitVector> direction;  // set for external adjacency
};

struct AdjacencyReport {
  bool ok = true;
  std::optional<AdjacencyFailure> failure;
  explicit operator bool() const { return ok; }
};

AdjacencyReport check_internal_adjacency(const CubePartition& part);
// For all i < j and signed axis v: some a in Q_i has a + (m+1)v in Q_j.
AdjacencyReport check_external_adjacency(const CubePartition& part);

DecoratedPartition decorate(const CubePartition& part);

}  // namespace tileforge
