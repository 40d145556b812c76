#include "tileforge/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tileforge {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw Error("dimension " + std::to_string(dim) + " outside 1.." + std::to_string(kMaxDim));
  }
}

void check_same_dim(const LatticeTile& a, const LatticeTile& b) {
  if (a.dim() != b.dim()) {
    throw Error("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

// Dense indexing of a bounding box, used when the box is small enough to
// allocate one bit per lattice point.
class DenseBox {
 public:
  explicit DenseBox(const BoundingBox& bb) : lo_(bb.lo), dim_(bb.lo.dim()) {
    Point ext = bb.extent();
    volume_ = 1;
    for (std::size_t k = dim_; k-- > 0;) {
      extent_[k] = ext[k];
      stride_[k] = volume_;
      volume_ *= static_cast<std::uint64_t>(ext[k]);
    }
  }

  std::uint64_t volume() const { return volume_; }

  std::optional<std::uint64_t> index(const Point& p) const {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
      int off = p[k] - lo_[k];
      if (off < 0 || off >= extent_[k]) return std::nullopt;
      idx += static_cast<std::uint64_t>(off) * stride_[k];
    }
    return idx;
  }

 private:
  Point lo_;
  std::size_t dim_;
  std::array<int, kMaxDim> extent_{};
  std::array<std::uint64_t, kMaxDim> stride_{};
  std::uint64_t volume_ = 1;
};

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 30;

}  // namespace

Point::Point(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

Point::Point(std::initializer_list<int> coords) : dim_(static_cast<std::uint8_t>(coords.size())) {
  check_dim(coords.size());
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Point Point::from(std::span<const int> coords) {
  Point p(coords.size());
  std::copy(coords.begin(), coords.end(), p.coords_.begin());
  return p;
}

Point Point::operator+(const Point& other) const {
  if (dim_ != other.dim_) throw Error("point dimension mismatch");
  Point r = *this;
  for (std::size_t k = 0; k < dim_; ++k) r.coords_[k] += other.coords_[k];
  return r;
}

Point Point::operator-(const Point& other) const {
  if (dim_ != other.dim_) throw Error("point dimension mismatch");
  Point r = *this;
  for (std::size_t k = 0; k < dim_; ++k) r.coords_[k] -= other.coords_[k];
  return r;
}

Point Point::operator-() const {
  Point r = *this;
  for (std::size_t k = 0; k < dim_; ++k) r.coords_[k] = -r.coords_[k];
  return r;
}

Point Point::scaled(int factor) const {
  Point r = *this;
  for (std::size_t k = 0; k < dim_; ++k) r.coords_[k] *= factor;
  return r;
}

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < dim_; ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

Point Point::unit(std::size_t dim, std::size_t axis, int sign) {
  Point p(dim);
  p[axis] = sign;
  return p;
}

Point wrap(const Point& p, std::span<const int> dims) {
  Point r = p;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    int m = p[k] % dims[k];
    r[k] = m < 0 ? m + dims[k] : m;
  }
  return r;
}

std::vector<UnitVector> signed_axes(std::size_t dim) {
  std::vector<UnitVector> out;
  for (std::size_t k = 0; k < dim; ++k) {
    out.push_back({k, 1});
    out.push_back({k, -1});
  }
  return out;
}

Point BoundingBox::extent() const {
  Point e = hi - lo;
  for (std::size_t k = 0; k < e.dim(); ++k) e[k] += 1;
  return e;
}

LatticeTile::LatticeTile(std::size_t dim, std::vector<Point> cells) : dim_(dim), cells_(std::move(cells)) {
  check_dim(dim);
  for (const auto& c : cells_) {
    if (c.dim() != dim) throw Error("cell " + c.str() + " has wrong dimension");
  }
  std::sort(cells_.begin(), cells_.end());
  auto dup = std::adjacent_find(cells_.begin(), cells_.end());
  if (dup != cells_.end()) throw Error("duplicate cell " + dup->str());
}

LatticeTile LatticeTile::from_unsorted(std::size_t dim, std::vector<Point> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return LatticeTile(dim, std::move(cells));
}

bool LatticeTile::contains(const Point& p) const { return std::binary_search(cells_.begin(), cells_.end(), p); }

BoundingBox LatticeTile::bounds() const {
  if (cells_.empty()) throw Error("empty tile has no bounding box");
  BoundingBox bb{cells_.front(), cells_.front()};
  for (const auto& c : cells_) {
    for (std::size_t k = 0; k < dim_; ++k) {
      bb.lo[k] = std::min(bb.lo[k], c[k]);
      bb.hi[k] = std::max(bb.hi[k], c[k]);
    }
  }
  return bb;
}

LatticeTile LatticeTile::translated(const Point& offset) const {
  LatticeTile r = *this;
  for (auto& c : r.cells_) c = c + offset;
  return r;
}

LatticeTile LatticeTile::scaled(int factor) const {
  if (factor < 1) throw Error("scale factor must be positive");
  LatticeTile r = *this;
  for (auto& c : r.cells_) c = c.scaled(factor);
  return r;
}

LatticeTile LatticeTile::united(const LatticeTile& other) const {
  check_same_dim(*this, other);
  LatticeTile r(dim_);
  r.cells_.reserve(size() + other.size());
  std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                 std::back_inserter(r.cells_));
  return r;
}

LatticeTile LatticeTile::minus(const LatticeTile& other) const {
  check_same_dim(*this, other);
  LatticeTile r(dim_);
  std::set_difference(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                      std::back_inserter(r.cells_));
  return r;
}

LatticeTile LatticeTile::intersected(const LatticeTile& other) const {
  check_same_dim(*this, other);
  LatticeTile r(dim_);
  std::set_intersection(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                        std::back_inserter(r.cells_));
  return r;
}

bool LatticeTile::intersects(const LatticeTile& other) const {
  check_same_dim(*this, other);
  auto i = cells_.begin();
  auto j = other.cells_.begin();
  while (i != cells_.end() && j != other.cells_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

OverlapError::OverlapError(SumCollision witness)
    : Error("overlapping Minkowski sum: " + witness.a1.str() + "+" + witness.b1.str() + " = " + witness.a2.str() +
            "+" + witness.b2.str()),
      witness_(std::move(witness)) {}

LatticeTile normalize(const LatticeTile& t) {
  if (t.empty()) throw Error("empty tile has no normal form");
  return t.translated(-t.bounds().lo);
}

LatticeTile minkowski_sum(const LatticeTile& a, const LatticeTile& b) {
  check_same_dim(a, b);
  std::vector<Point> sums;
  sums.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) sums.push_back(p + q);
  }
  std::sort(sums.begin(), sums.end());
  auto dup = std::adjacent_find(sums.begin(), sums.end());
  if (dup != sums.end()) {
    const Point target = *dup;
    std::optional<std::pair<Point, Point>> first;
    for (const auto& p : a) {
      for (const auto& q : b) {
        if (p + q != target) continue;
        if (!first) {
          first.emplace(p, q);
        } else {
          throw OverlapError({first->first, first->second, p, q});
        }
      }
    }
  }
  return LatticeTile(a.dim(), std::move(sums));
}

LatticeTile inflate(const LatticeTile& t, int factor) {
  if (factor < 1) throw Error("inflation factor must be positive");
  if (t.empty()) return t;
  return minkowski_sum(t.scaled(factor), cube(t.dim(), factor));
}

bool is_connected(const LatticeTile& t) {
  if (t.empty()) throw Error("connectivity of the empty tile is undefined");
  const auto& cells = t.cells();
  const std::size_t n = cells.size();
  const std::size_t d = t.dim();
  DenseBox dense(t.bounds());

  // Dense path: a bit per box point marks membership, another marks visits.
  if (dense.volume() <= kDenseLimit) {
    std::vector<bool> member(dense.volume()), seen(dense.volume());
    for (const auto& c : cells) member[*dense.index(c)] = true;
    std::vector<Point> stack{cells.front()};
    seen[*dense.index(cells.front())] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < d; ++k) {
        for (int s : {-1, 1}) {
          Point q = p;
          q[k] += s;
          auto idx = dense.index(q);
          if (!idx || !member[*idx] || seen[*idx]) continue;
          seen[*idx] = true;
          ++reached;
          stack.push_back(q);
        }
      }
    }
    return reached == n;
  }

  std::vector<bool> seen(n);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < d; ++k) {
      for (int s : {-1, 1}) {
        Point q = cells[i];
        q[k] += s;
        auto it = std::lower_bound(cells.begin(), cells.end(), q);
        if (it == cells.end() || *it != q) continue;
        auto j = static_cast<std::size_t>(it - cells.begin());
        if (seen[j]) continue;
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

bool are_adjacent(const LatticeTile& a, const LatticeTile& b) {
  check_same_dim(a, b);
  if (a.intersects(b)) throw Error("tiles overlap");
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& p : small) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (int s : {-1, 1}) {
        Point q = p;
        q[k] += s;
        if (large.contains(q)) return true;
      }
    }
  }
  return false;
}

LatticeTile product(const LatticeTile& a, const LatticeTile& b) {
  const std::size_t d = a.dim() + b.dim();
  check_dim(d);
  std::vector<Point> cells;
  cells.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) {
      Point r(d);
      for (std::size_t k = 0; k < a.dim(); ++k) r[k] = p[k];
      for (std::size_t k = 0; k < b.dim(); ++k) r[a.dim() + k] = q[k];
      cells.push_back(r);
    }
  }
  return LatticeTile(d, std::move(cells));
}

LatticeTile cube(std::size_t dim, int side) {
  Point lo(dim), hi(dim);
  for (std::size_t k = 0; k < dim; ++k) hi[k] = side - 1;
  return box(lo, hi);
}

LatticeTile box(const Point& lo, const Point& hi) {
  const std::size_t d = lo.dim();
  std::vector<Point> cells;
  for (std::size_t k = 0; k < d; ++k) {
    if (hi[k] < lo[k]) return LatticeTile(d);
  }
  Point p = lo;
  // Odometer over the box; the last axis varies fastest.
  while (true) {
    cells.push_back(p);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (p[k] < hi[k]) {
        ++p[k];
        break;
      }
      p[k] = lo[k];
      if (k == 0) return LatticeTile(d, std::move(cells));
    }
  }
}

LatticeTile line(std::initializer_list<int> xs) { return line(std::span<const int>(xs.begin(), xs.size())); }

LatticeTile line(std::span<const int> xs) {
  std::vector<Point> cells;
  for (int x : xs) cells.push_back(Point{x});
  return LatticeTile(1, std::move(cells));
}

}  // namespace tileforge
