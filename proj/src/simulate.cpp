#include "tileforge/simulate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tileforge {

namespace {

BigInt ipow(BigInt base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

void check_tiles(const std::vector<LatticeTile>& tiles) {
  if (tiles.empty()) throw Error("simulation needs at least one tile");
  const std::size_t d = tiles.front().dim();
  if (d < 3) throw Error("simulation needs dimension >= 3");
  for (const auto& t : tiles) {
    if (t.dim() != d) throw Error("all tiles must share one dimension");
    if (t.empty()) throw Error("cannot simulate an empty tile");
  }
}

}  // namespace

ShellFrame shell_frame(std::size_t dim, int l) {
  if (dim < 3) throw Error("the shell frame needs dimension >= 3");
  if (l < 3) throw Error("the shell frame needs l >= 3");
  BigInt m = ipow(l, dim) - ipow(l - 2, dim);
  BigInt period = 3 * m + 6;
  if (period > std::numeric_limits<int>::max() / 4) throw ResourceError("shell frame too large for lattice coordinates");
  ShellFrame f;
  f.dim = dim;
  f.l = l;
  f.m = static_cast<int>(m);
  f.period = static_cast<int>(period);
  return f;
}

std::vector<Point> shell_cells(std::size_t dim, int l) {
  std::vector<Point> out;
  for (const auto& p : cube(dim, l)) {
    bool on_shell = false;
    for (std::size_t k = 0; k < dim; ++k) on_shell = on_shell || p[k] == 0 || p[k] == l - 1;
    if (on_shell) out.push_back(p);
  }
  return out;
}

LatticeTile build_s(std::size_t dim, int l) {
  const ShellFrame frame = shell_frame(dim, l);
  const auto shell = shell_cells(dim, l);
  const DecoratedPartition dec = decorate(partition_cube(dim, frame.m));
  std::vector<Point> cells;
  for (std::size_t i = 0; i < shell.size(); ++i) {
    const Point offset = shell[i].scaled(frame.period);
    for (const auto& c : dec.parts[i]) cells.push_back(c + offset);
  }
  return LatticeTile(dim, std::move(cells));
}

bool verify_lattice_partition(const LatticeTile& t, int period) {
  if (period < 1) throw Error("period must be positive");
  if (t.empty()) return false;
  const std::size_t d = t.dim();
  BigInt volume = ipow(period, d);
  if (volume != t.size()) return false;
  std::vector<bool> hit(static_cast<std::size_t>(volume));
  const std::vector<int> dims(d, period);
  for (const auto& c : t) {
    Point r = wrap(c, dims);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < d; ++k) idx = idx * static_cast<std::size_t>(period) + static_cast<std::size_t>(r[k]);
    if (hit[idx]) return false;
    hit[idx] = true;
  }
  return true;
}

int frame_side(const std::vector<LatticeTile>& tiles) {
  check_tiles(tiles);
  int l = 3;
  for (const auto& t : tiles) {
    Point ext = t.bounds().extent();
    for (std::size_t k = 0; k < t.dim(); ++k) l = std::max(l, ext[k]);
  }
  return l;
}

SimulationSize simulation_size(const std::vector<LatticeTile>& tiles) {
  const int l = frame_side(tiles);
  const std::size_t d = tiles.front().dim();
  SimulationSize out;
  // Computed in big integers so huge frames still report exact counts.
  BigInt m = ipow(l, d) - ipow(l - 2, d);
  BigInt period = 3 * m + 6;
  out.frame.dim = d;
  out.frame.l = l;
  out.frame.m = m > std::numeric_limits<int>::max() ? -1 : static_cast<int>(m);
  out.frame.period = period > std::numeric_limits<int>::max() ? -1 : static_cast<int>(period);
  out.s_cells = ipow(period, d);
  out.total_cells = 0;
  for (const auto& t : tiles) {
    out.tile_cells.push_back(out.s_cells * t.size());
    out.total_cells += out.tile_cells.back();
  }
  return out;
}

SimulationResult simulate_set(const std::vector<LatticeTile>& tiles, std::uint64_t max_cells) {
  const SimulationSize size = simulation_size(tiles);
  if (size.total_cells + size.s_cells > max_cells) {
    throw ResourceError("simulation would materialize " + size.total_cells.str() + " cells, above the budget of " +
                        std::to_string(max_cells));
  }
  SimulationResult out;
  out.frame = shell_frame(tiles.front().dim(), size.frame.l);
  out.shell = shell_cells(out.frame.dim, out.frame.l);
  out.s_tile = build_s(out.frame.dim, out.frame.l);
  for (const auto& p : tiles) {
    try {
      out.transformed.push_back(minkowski_sum(p.scaled(out.frame.period), out.s_tile));
    } catch (const OverlapError& e) {
      throw std::logic_error(std::string("internal error: ") + e.what());
    }
  }
  return out;
}

ForcingReport check_bump_dent_forcing(const DecoratedPartition& dec, int window) {
  const std::size_t d = dec.dim;
  const LatticeTile& q = dec.parts.front();
  ForcingReport report;
  for (const auto& v : signed_axes(d)) {
    // The socket is the dent that the pair must fill: our own dent for +v,
    // the neighbour's dent (to be filled by our bump) for -v.
    Point dent(d);
    for (std::size_t j = 0; j < d; ++j) dent[j] = 1;
    dent[v.axis] = dec.side - 1;
    const Point base = v.as_point(d).scaled(dec.side);

    for (const auto& delta : cube(d, 2 * window + 1)) {
      Point w = base;
      bool zero = true;
      for (std::size_t j = 0; j < d; ++j) {
        w[j] += delta[j] - window;
        zero = zero && delta[j] == window;
      }
      const LatticeTile moved = q.translated(w);
      const bool overlap = moved.intersects(q);
      const bool filled = v.sign > 0 ? moved.contains(dent) : q.contains(dent + w);
      ++report.offsets_checked;
      const bool fits = !overlap && filled;
      if (fits != zero) {
        std::ostringstream os;
        os << "offset " << w.str() << (zero ? " should fit but does not" : " fits although it is off-lattice");
        report.ok = false;
        report.failure = os.str();
        return report;
      }
    }
  }
  return report;
}

}  // namespace tileforge
