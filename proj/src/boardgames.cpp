#include "tileforge/boardgames.hpp"

#include <numeric>
#include <string>

namespace tileforge {

namespace {

int mod(long v, int n) {
  long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_pairs(const std::set<ValuePair>& rel, int m, const char* name) {
  for (const auto& [a, b] : rel) {
    if (a < 1 || a > m || b < 1 || b > m) {
      throw Error(std::string("pair in ") + name + " outside W = {1.." + std::to_string(m) + "}");
    }
  }
}

}  // namespace

void DominoSet::validate() const {
  if (m < 1) throw Error("domino set needs m >= 1");
  check_pairs(r1, m, "R1");
  check_pairs(r2, m, "R2");
}

TripleSet::TripleSet(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n * n) {
  if (n < 1) throw Error("modulus must be positive");
}

std::size_t TripleSet::index(const Triple& t) const {
  if (t.a < 0 || t.a >= n_ || t.b < 0 || t.b >= n_ || t.c < 0 || t.c >= n_) {
    throw Error("triple outside Z_" + std::to_string(n_));
  }
  return (static_cast<std::size_t>(t.a) * n_ + t.b) * n_ + t.c;
}

bool TripleSet::contains(const Triple& t) const { return bits_[index(t)]; }

void TripleSet::insert(const Triple& t) {
  auto ref = bits_[index(t)];
  if (!ref) {
    ref = true;
    ++count_;
  }
}

std::vector<Triple> TripleSet::members() const {
  std::vector<Triple> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        if (bits_[index({a, b, c})]) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

CyclicTriominoSet::CyclicTriominoSet(int n_) : n(n_) {
  for (auto& r : rules) r = TripleSet(n_);
}

GridAssignment::GridAssignment(int px, int py, int fill) : px_(px), py_(py) {
  if (px < 1 || py < 1) throw Error("grid periods must be >= 1");
  values_.assign(static_cast<std::size_t>(px), std::vector<int>(static_cast<std::size_t>(py), fill));
}

GridAssignment GridAssignment::from_rows(std::vector<std::vector<int>> values) {
  if (values.empty() || values.front().empty()) throw Error("grid periods must be >= 1");
  for (const auto& col : values) {
    if (col.size() != values.front().size()) throw Error("ragged grid values");
  }
  GridAssignment g;
  g.px_ = static_cast<int>(values.size());
  g.py_ = static_cast<int>(values.front().size());
  g.values_ = std::move(values);
  return g;
}

int GridAssignment::at(long x, long y) const {
  return values_[static_cast<std::size_t>(mod(x, px_))][static_cast<std::size_t>(mod(y, py_))];
}

void GridAssignment::set(int x, int y, int v) {
  values_[static_cast<std::size_t>(mod(x, px_))][static_cast<std::size_t>(mod(y, py_))] = v;
}

GridAssignment GridAssignment::reduced() const {
  auto is_period = [this](int dx, int dy) {
    for (int x = 0; x < px_; ++x) {
      for (int y = 0; y < py_; ++y) {
        if (at(x + dx, y + dy) != at(x, y)) return false;
      }
    }
    return true;
  };
  int qx = px_, qy = py_;
  for (int d = 1; d <= px_; ++d) {
    if (px_ % d == 0 && is_period(d, 0)) {
      qx = d;
      break;
    }
  }
  for (int d = 1; d <= py_; ++d) {
    if (py_ % d == 0 && is_period(0, d)) {
      qy = d;
      break;
    }
  }
  GridAssignment out(qx, qy);
  for (int x = 0; x < qx; ++x) {
    for (int y = 0; y < qy; ++y) out.set(x, y, at(x, y));
  }
  return out;
}

bool same_function(const GridAssignment& a, const GridAssignment& b) {
  const int lx = std::lcm(a.px(), b.px());
  const int ly = std::lcm(a.py(), b.py());
  for (int x = 0; x < lx; ++x) {
    for (int y = 0; y < ly; ++y) {
      if (a.at(x, y) != b.at(x, y)) return false;
    }
  }
  return true;
}

std::array<int, 2> triomino_step(int i) {
  static constexpr std::array<std::array<int, 2>, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  return kSteps[static_cast<std::size_t>(mod(i - 1, 4))];
}

bool validate_cyclic(const CyclicTriominoSet& s) {
  const int n = s.n;
  for (const auto& rule : s.rules) {
    if (rule.modulus() != n) return false;
    for (const auto& t : rule.members()) {
      if (!rule.contains({(t.a + 1) % n, (t.b + 1) % n, (t.c + 1) % n})) return false;
    }
  }
  return true;
}

bool check_domino(const DominoSet& r, const GridAssignment& g) {
  for (const auto& col : g.values()) {
    for (int v : col) {
      if (v < 1 || v > r.m) throw Error("grid value " + std::to_string(v) + " outside W");
    }
  }
  for (int x = 0; x < g.px(); ++x) {
    for (int y = 0; y < g.py(); ++y) {
      const int v = g.at(x, y);
      if (!r.r1.contains({v, g.at(x + 1, y)})) return false;
      if (!r.r2.contains({v, g.at(x, y + 1)})) return false;
    }
  }
  return true;
}

bool check_triomino(const CyclicTriominoSet& s, const GridAssignment& g) {
  for (const auto& col : g.values()) {
    for (int v : col) {
      if (v < 0 || v >= s.n) throw Error("grid value " + std::to_string(v) + " outside Z_" + std::to_string(s.n));
    }
  }
  for (int x = 0; x < g.px(); ++x) {
    for (int y = 0; y < g.py(); ++y) {
      for (int i = 1; i <= 4; ++i) {
        const auto u = triomino_step(i);
        const auto w = triomino_step(i + 1);
        const Triple t{g.at(x, y), g.at(x + u[0], y + u[1]), g.at(x + w[0], y + w[1])};
        if (!s.rules[static_cast<std::size_t>(i - 1)].contains(t)) return false;
      }
    }
  }
  return true;
}

std::array<std::vector<Triple>, 4> encoding_representatives(const DominoSet& r) {
  r.validate();
  std::array<std::vector<Triple>, 4> k;
  for (auto& ki : k) {
    for (int w = 1; w <= r.m; ++w) ki.push_back({w, 0, 0});
  }
  for (const auto& [a, b] : r.r1) {
    k[0].push_back({0, b, a});
    k[2].push_back({0, a, b});
  }
  for (const auto& [a, b] : r.r2) {
    k[1].push_back({0, a, b});
    k[3].push_back({0, b, a});
  }
  return k;
}

CyclicTriominoSet encode_domino(const DominoSet& r, int n, bool require_gcd6) {
  r.validate();
  if (n < 2 * r.m + 1) {
    throw Error("modulus " + std::to_string(n) + " too small: need n >= 2m+1 = " + std::to_string(2 * r.m + 1));
  }
  if (require_gcd6 && std::gcd(n, 6) != 1) throw Error("modulus " + std::to_string(n) + " is not coprime to 6");
  const auto reps = encoding_representatives(r);
  CyclicTriominoSet s(n);
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& t : reps[i]) {
      for (int k = 0; k < n; ++k) {
        const Triple shifted{(t.a + k) % n, (t.b + k) % n, (t.c + k) % n};
        if (s.rules[i].contains(shifted)) throw std::logic_error("encoding orbits collide");
        s.rules[i].insert(shifted);
      }
    }
  }
  return s;
}

GridAssignment lift_solution(const DominoSet& r, const GridAssignment& g, int n, int delta) {
  if (delta != 0 && delta != 1) throw Error("delta must be 0 or 1");
  if (n < 2 * r.m + 1) throw Error("modulus too small for the encoding");
  if (!check_domino(r, g)) throw Error("grid is not a solution of the domino set");
  const int period = 2 * std::lcm(g.px(), g.py());
  GridAssignment out(period, period, 0);
  for (int x = 0; x < period; ++x) {
    for (int y = 0; y < period; ++y) {
      if (mod(x + y, 2) != delta) continue;
      // Invert (x, y) = (delta, 0) + i*(1,-1) + j*(-1,-1).
      const int dx = x - delta;
      const long i = (dx - y) / 2;
      const long j = -(dx + y) / 2;
      out.set(x, y, g.at(i, j));
    }
  }
  return out;
}

ProjectedSolution project_solution(const CyclicTriominoSet& s, const DominoSet& r, const GridAssignment& g) {
  const int n = s.n;
  if (g.px() % 2 != 0 || g.py() % 2 != 0) throw Error("non-canonical triomino solution: odd torus period");
  std::optional<ProjectedSolution> found;
  for (int delta = 0; delta <= 1 && !found; ++delta) {
    const int shift = g.at(1 - delta, 0);
    bool ok = true;
    for (int x = 0; x < g.px() && ok; ++x) {
      for (int y = 0; y < g.py() && ok; ++y) {
        const int v = mod(g.at(x, y) - shift, n);
        ok = mod(x + y, 2) == delta ? (v >= 1 && v <= r.m) : v == 0;
      }
    }
    if (ok) found = ProjectedSolution{GridAssignment(), delta, shift};
  }
  if (!found) throw Error("non-canonical triomino solution");
  if (!check_triomino(s, g)) throw Error("grid is not a solution of the triomino set");

  const int period = std::lcm(g.px(), g.py());
  GridAssignment dom(period, period, 1);
  for (int i = 0; i < period; ++i) {
    for (int j = 0; j < period; ++j) {
      const long x = found->delta + i - j;
      const long y = -i - j;
      dom.set(i, j, mod(g.at(x, y) - found->shift, n));
    }
  }
  if (!check_domino(r, dom)) throw Error("projected grid violates the domino rules; the triomino set does not encode them");
  found->grid = dom.reduced();
  return *found;
}

}  // namespace tileforge
