#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tileforge/error.hpp"

namespace tileforge {

inline constexpr std::size_t kMaxDim = 8;

// An integer point of Z^d, 1 <= d <= kMaxDim. Unused trailing coordinates
// are kept at zero so the defaulted ordering is lexicographic.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim);
  Point(std::initializer_list<int> coords);
  static Point from(std::span<const int> coords);

  std::size_t dim() const { return dim_; }
  int operator[](std::size_t axis) const { return coords_[axis]; }
  int& operator[](std::size_t axis) { return coords_[axis]; }
  std::span<const int> coords() const { return {coords_.data(), dim_}; }

  Point operator+(const Point& other) const;
  Point operator-(const Point& other) const;
  Point operator-() const;
  Point scaled(int factor) const;

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;

  std::string str() const;

  static Point unit(std::size_t dim, std::size_t axis, int sign = 1);

 private:
  std::uint8_t dim_ = 0;
  std::array<int, kMaxDim> coords_{};
};

// Translates to `p` reduced into [0, dims) on every axis.
Point wrap(const Point& p, std::span<const int> dims);

struct UnitVector {
  std::size_t axis = 0;  // 0-based
  int sign = 1;

  Point as_point(std::size_t dim) const { return Point::unit(dim, axis, sign); }
};

// All 2d signed axis vectors, ordered +e_0, -e_0, +e_1, -e_1, ...
std::vector<UnitVector> signed_axes(std::size_t dim);

struct BoundingBox {
  Point lo;
  Point hi;  // inclusive
  Point extent() const;
};

// Finite set of lattice points with sorted, duplicate-free storage.
// Empty tiles are representable; operations that need cells reject them.
class LatticeTile {
 public:
  LatticeTile() = default;
  explicit LatticeTile(std::size_t dim) : dim_(dim) {}
  // Throws Error on duplicate cells or mixed dimensions.
  LatticeTile(std::size_t dim, std::vector<Point> cells);
  // Like the constructor but drops duplicates instead of rejecting them.
  static LatticeTile from_unsorted(std::size_t dim, std::vector<Point> cells);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Point>& cells() const { return cells_; }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }

  bool contains(const Point& p) const;
  BoundingBox bounds() const;

  LatticeTile translated(const Point& offset) const;
  LatticeTile scaled(int factor) const;
  LatticeTile united(const LatticeTile& other) const;
  LatticeTile minus(const LatticeTile& other) const;
  LatticeTile intersected(const LatticeTile& other) const;
  bool intersects(const LatticeTile& other) const;

  bool operator==(const LatticeTile&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Point> cells_;
};

// Minkowski sum collision: lhs_a + lhs_b == rhs_a + rhs_b with distinct pairs.
struct SumCollision {
  Point a1, b1, a2, b2;
};

class OverlapError : public Error {
 public:
  explicit OverlapError(SumCollision witness);
  const SumCollision& witness() const { return witness_; }

 private:
  SumCollision witness_;
};

LatticeTile normalize(const LatticeTile& t);
LatticeTile minkowski_sum(const LatticeTile& a, const LatticeTile& b);
LatticeTile inflate(const LatticeTile& t, int factor);
bool is_connected(const LatticeTile& t);
bool are_adjacent(const LatticeTile& a, const LatticeTile& b);

// Cartesian product: cells (p, q) with p from `a` and q from `b`.
LatticeTile product(const LatticeTile& a, const LatticeTile& b);

// {0..side-1}^dim.
LatticeTile cube(std::size_t dim, int side);
// Axis-aligned box [lo, hi] inclusive.
LatticeTile box(const Point& lo, const Point& hi);
// 1-D tile from integer positions.
LatticeTile line(std::initializer_list<int> xs);
LatticeTile line(std::span<const int> xs);

}  // namespace tileforge
