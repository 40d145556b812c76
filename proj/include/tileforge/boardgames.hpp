#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tileforge/error.hpp"

namespace tileforge {

using ValuePair = std::pair<int, int>;

struct Triple {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Triple&) const = default;
};

// Domino rule set over W = {1..m}: horizontal pairs R1, vertical pairs R2.
struct DominoSet {
  int m = 0;
  std::set<ValuePair> r1;
  std::set<ValuePair> r2;

  void validate() const;
};

// Subset of Z_n^3 with dense membership.
class TripleSet {
 public:
  TripleSet() = default;
  explicit TripleSet(int n);

  int modulus() const { return n_; }
  bool contains(const Triple& t) const;
  void insert(const Triple& t);
  std::size_t size() const { return count_; }
  // Members in lexicographic order.
  std::vector<Triple> members() const;
  bool operator==(const TripleSet&) const = default;

 private:
  std::size_t index(const Triple& t) const;
  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<bool> bits_;
};

// Rule sets S_1..S_4 over V = Z_n, stored 0-based (rules[0] is S_1).
struct CyclicTriominoSet {
  int n = 0;
  std::array<TripleSet, 4> rules;

  explicit CyclicTriominoSet(int n = 1);
};

// Doubly periodic assignment T : Z^2 -> values, stored values[x][y].
class GridAssignment {
 public:
  GridAssignment() = default;
  GridAssignment(int px, int py, int fill = 0);
  static GridAssignment from_rows(std::vector<std::vector<int>> values);

  int px() const { return px_; }
  int py() const { return py_; }
  int at(long x, long y) const;
  void set(int x, int y, int v);
  const std::vector<std::vector<int>>& values() const { return values_; }

  // Smallest periods along each axis that still describe the same function.
  GridAssignment reduced() const;
  bool operator==(const GridAssignment&) const = default;

 private:
  int px_ = 0, py_ = 0;
  std::vector<std::vector<int>> values_;
};

// Equality as functions on Z^2, regardless of the stored periods.
bool same_function(const GridAssignment& a, const GridAssignment& b);

// Unit steps u_1..u_4 of the triomino board, index taken mod 4.
std::array<int, 2> triomino_step(int i);

bool validate_cyclic(const CyclicTriominoSet& s);
bool check_domino(const DominoSet& r, const GridAssignment& g);
bool check_triomino(const CyclicTriominoSet& s, const GridAssignment& g);

// Orbit closure of the domino encoding. Requires n >= 2m+1; with
// `require_gcd6`, also gcd(n, 6) = 1.
CyclicTriominoSet encode_domino(const DominoSet& r, int n, bool require_gcd6 = false);

// Orbit representatives K_1..K_4 used by encode_domino.
std::array<std::vector<Triple>, 4> encoding_representatives(const DominoSet& r);

// Checkerboard lift of a domino solution. Domino step e1 goes to (1,-1) and
// e2 to (-1,-1) on the triomino board; the origin cell lands on (delta, 0).
// Output periods are 2*lcm(px, py) on both axes.
GridAssignment lift_solution(const DominoSet& r, const GridAssignment& g, int n, int delta = 0);

struct ProjectedSolution {
  GridAssignment grid;  // reduced to minimal periods
  int delta = 0;        // parity class of the non-zero cells
  int shift = 0;        // global shift k removed from every value
};

// Inverse of lift_solution for any solution in canonical checkerboard form.
ProjectedSolution project_solution(const CyclicTriominoSet& s, const DominoSet& r, const GridAssignment& g);

}  // namespace tileforge
