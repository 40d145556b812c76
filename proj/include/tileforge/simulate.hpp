#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "tileforge/lattice.hpp"
#include "tileforge/partition.hpp"

namespace tileforge {

using BigInt = boost::multiprecision::cpp_int;

// Parameters of the connected super-tile built on the shell of an l-cube.
struct ShellFrame {
  std::size_t dim = 3;
  int l = 3;
  int m = 0;       // l^d - (l-2)^d
  int period = 0;  // 3m + 6
};

ShellFrame shell_frame(std::size_t dim, int l);

// Shell cells of {0..l-1}^d in lexicographic order.
std::vector<Point> shell_cells(std::size_t dim, int l);

// The connected tile that tiles Z^d only along period * Z^d.
LatticeTile build_s(std::size_t dim, int l);

// True iff t + period*Z^d partitions Z^d.
bool verify_lattice_partition(const LatticeTile& t, int period);

struct SimulationResult {
  ShellFrame frame;
  std::vector<Point> shell;
  LatticeTile s_tile;
  std::vector<LatticeTile> transformed;
};

struct SimulationSize {
  ShellFrame frame;
  BigInt s_cells;                 // period^d
  std::vector<BigInt> tile_cells;  // |P_i| * period^d
  BigInt total_cells;
};

// Smallest l >= 3 such that every normalized tile fits in an l-cube.
int frame_side(const std::vector<LatticeTile>& tiles);

SimulationSize simulation_size(const std::vector<LatticeTile>& tiles);

// Replaces each tile P by period*P (+) S. Throws ResourceError when the
// predicted output exceeds `max_cells`.
SimulationResult simulate_set(const std::vector<LatticeTile>& tiles, std::uint64_t max_cells = 100'000'000);

struct ForcingReport {
  bool ok = true;
  std::size_t offsets_checked = 0;
  std::string failure;
  explicit operator bool() const { return ok; }
};

// Local bump/dent check on the decorated first part: along every signed axis
// the exact lattice neighbour fits (bump fills the dent without overlap), and
// every perturbed offset within `window` either overlaps or leaves the dent
// uncovered.
ForcingReport check_bump_dent_forcing(const DecoratedPartition& dec, int window = 2);

}  // namespace tileforge
