#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tileforge/boardgames.hpp"
#include "tileforge/lattice.hpp"
#include "tileforge/solver.hpp"

namespace tileforge {

enum class BlockerKind { alpha, beta, gamma };

const char* to_string(BlockerKind kind);

// One-dimensional period-6 blocker; `on` selects the state.
struct Blocker {
  BlockerKind kind;
  bool on;
  LatticeTile cells;
};

Blocker blocker(BlockerKind kind, bool on);

// The domino D = {0, 1}.
LatticeTile domino_tile();

struct BlockerVerdict {
  int alpha, beta, gamma;  // states, 0 = off
  bool tileable;
};

// All eight state combinations on the period-6 torus, in (alpha, beta, gamma)
// lexicographic order.
std::vector<BlockerVerdict> blocker_truth_table();

struct Tower {
  BlockerKind kind;
  int n;
  LatticeTile cells;  // 1-D, not reduced
};

// Throws Error unless gcd(n, 6) == 1.
Tower tower(BlockerKind kind, int n);

// Torus of length 6n with the three shifted towers as obstacles.
Region tower_region(int n, int a, int b, int c);
// Whether nD = {0, n} tiles the leftover column.
bool tower_check(int n, int a, int b, int c);

// For each rule set, the complement triples with first coordinate 0, sorted.
std::array<std::vector<Triple>, 4> representatives(const CyclicTriominoSet& s);

// The eight-cell ring {-1,0,1}^2 minus the centre, as a 2-D tile.
LatticeTile ring();

struct TowerSlot {
  int index;  // 1-based pole index
  int group;  // which rule set (1..4) the triple comes from
  Triple triple;
};

struct GadgetSet {
  int n = 0;
  int m = 0;
  std::vector<TowerSlot> layout;
  LatticeTile filler;
  LatticeTile empty_brick;
  LatticeTile brick;
  // Present after decorate_gadgets.
  std::optional<LatticeTile> brick3;
  std::optional<LatticeTile> filler3;
  LatticeTile bumps3;
  LatticeTile dents3;

  int brick_width() const { return 3 * m + 2; }
  static constexpr int brick_depth = 5;
  int column_height() const { return 6 * n; }
  // Ring centre (x, y) of pole i (1-based) in brick coordinates.
  std::array<int, 2> pole_center(int i) const { return {3 * i - 1, 2}; }
};

// Tower piece T_{q,i,j}: q in 0..5 selects kind and neighbour, i is the
// 1-based pole, j the vertical shift in units of 6.
LatticeTile tower_piece(int q, int i, int j, int n, int m);

GadgetSet build_gadgets(const CyclicTriominoSet& s);

// Adds the 3x inflated brick/filler with bumps and dents.
GadgetSet decorate_gadgets(GadgetSet g);

// Brick translation vectors realizing a triomino grid: one brick per board
// cell at ((3m+2)x, 5y, 6T(x,y)).
std::vector<Point> brick_offsets(const GadgetSet& g, const GridAssignment& t);

// Column instance seen by the ring centred at (cx, cy), given bricks placed at
// `offsets` in Z^3. Obstacles are tower heights modulo 6n.
Region pole_column(const GadgetSet& g, const std::vector<Point>& offsets, int cx, int cy);

// Certificate that brick and filler tile the ((3m+2)px, 5py, 6n) torus,
// or the 3x torus with brick3/filler3 when `scaled` is set.
TilingCertificate realize_tiling(const CyclicTriominoSet& s, const GadgetSet& g, const GridAssignment& t,
                                 bool scaled = false);

// Centre of a {-1,0,1}^2 x {0} plate fully inside the free cells of a
// bounded region, if any.
std::optional<Point> find_plate(const Region& region);

}  // namespace tileforge
