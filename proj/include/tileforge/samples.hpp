#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tileforge/boardgames.hpp"
#include "tileforge/solver.hpp"

namespace tileforge {

struct DominoSample {
  std::string name;
  DominoSet rules;
  GridAssignment solution;
  int n;  // smallest modulus with n >= 2m+1 and gcd(n, 6) = 1
};

// Small domino sets with a known periodic solution.
std::vector<DominoSample> domino_samples();

// Smallest n >= 2m+1 coprime to 6.
int gadget_modulus(int m);

// n = 5 set whose complements are single orbits, one per rule set, so m = 4.
// The constant grid 0 solves it.
CyclicTriominoSet sample_triomino_set();
// The forbidden orbit representatives of sample_triomino_set, by rule set.
std::array<Triple, 4> sample_forbidden_triples();

struct SolverCase {
  std::string name;
  Region region;
  std::vector<LatticeTile> tiles;
};

// 1-D instances on tori and boxes of length <= 42: the blocker and tower
// columns, every hole pattern on short lengths, and random ones.
std::vector<SolverCase> one_dim_cases(std::uint64_t seed, int random_count);
// Random 2-D and 3-D instances with at most `max_cells` cells.
std::vector<SolverCase> random_cases(std::uint64_t seed, int count, int max_cells = 10'000);

}  // namespace tileforge
