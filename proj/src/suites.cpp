#include "tileforge/suites.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "tileforge/brute_force.hpp"
#include "tileforge/gadgets.hpp"
#include "tileforge/partition.hpp"
#include "tileforge/samples.hpp"
#include "tileforge/simulate.hpp"

namespace tileforge {

namespace {

std::string repro_command(const std::string& name, const SuiteParams& p) {
  std::ostringstream os;
  os << "tileforge verify-suite " << name << " --m-max " << p.m_max << " --m-max-high " << p.m_max_high << " --tower-n ";
  for (std::size_t i = 0; i < p.tower_n.size(); ++i) os << (i ? "," : "") << p.tower_n[i];
  os << " --seed " << p.seed << " --oracle-cases " << p.oracle_cases;
  if (p.scaled) os << " --scaled";
  return os.str();
}

class Recorder {
 public:
  Recorder(SuiteReport& report, std::string repro) : report_(report), repro_(std::move(repro)) {}

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++report_.cases;
    if (!ok) report_.failures.push_back({name, detail.empty() ? "check failed" : detail, repro_});
  }

  // Runs `body`; an escaping exception counts as a failed case.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  SuiteReport& report_;
  std::string repro_;
};

void partition_suite(Recorder& rec, const SuiteParams& p) {
  std::vector<std::pair<std::size_t, int>> configs;
  for (int m = 1; m <= p.m_max; ++m) configs.push_back({3, m});
  for (std::size_t d : {4u, 5u}) {
    for (int m = 1; m <= p.m_max_high; ++m) configs.push_back({d, m});
  }
  for (const auto& [d, m] : configs) {
    const std::string tag = "d=" + std::to_string(d) + " m=" + std::to_string(m);
    rec.guarded(tag, [&, d = d, m = m] {
      const auto part = partition_cube(d, m);
      validate_partition(part);
      bool labels = true;
      for (std::size_t i = 0; i < part.parts.size(); ++i) {
        for (const auto& c : part.parts[i]) labels = labels && f_value(m, c) == static_cast<int>(i) + 1;
      }
      rec.check(tag + " labels", labels, "f disagrees with part membership");
      bool connected = true;
      for (const auto& q : part.parts) connected = connected && is_connected(q);
      rec.check(tag + " connected", connected, "a part is disconnected");
      const auto inner = check_internal_adjacency(part);
      rec.check(tag + " internal", inner.ok,
                inner.failure ? "parts " + std::to_string(inner.failure->i) + "," + std::to_string(inner.failure->j) : "");
      const auto outer = check_external_adjacency(part);
      rec.check(tag + " external", outer.ok,
                outer.failure ? "parts " + std::to_string(outer.failure->i) + "," + std::to_string(outer.failure->j) : "");
    });
  }
}

void simulate_suite(Recorder& rec, const SuiteParams&) {
  rec.guarded("S_3", [&] {
    const auto frame = shell_frame(3, 3);
    const auto s = build_s(3, 3);
    rec.check("S_3 size", s.size() == 592704u, "got " + std::to_string(s.size()));
    rec.check("S_3 connected", is_connected(s));
    rec.check("S_3 lattice partition", verify_lattice_partition(s, frame.period));
    const auto forcing = check_bump_dent_forcing(decorate(partition_cube(3, frame.m)));
    rec.check("S_3 bump/dent window", forcing.ok, forcing.failure);
    TilingCertificate cert{Region(RegionMode::torus, {frame.period, frame.period, frame.period}), {s}, {{0, Point{0, 0, 0}}}};
    rec.check("S_3 single-translate torus certificate", verify(cert).ok, verify(cert).violation);
  });
  rec.guarded("two disconnected tiles", [&] {
    const std::vector<LatticeTile> input{LatticeTile(3, {Point{0, 0, 0}, Point{2, 0, 0}}),
                                         LatticeTile(3, {Point{0, 0, 0}, Point{1, 1, 2}, Point{2, 2, 0}})};
    const auto size = simulation_size(input);
    const auto r = simulate_set(input);
    rec.check("frame l=3", r.frame.l == 3, "l = " + std::to_string(r.frame.l));
    rec.check("two outputs", r.transformed.size() == input.size());
    const std::uint64_t cube = 84ull * 84 * 84;
    for (std::size_t i = 0; i < r.transformed.size(); ++i) {
      const std::string tag = "output " + std::to_string(i);
      rec.check(tag + " connected", is_connected(r.transformed[i]));
      rec.check(tag + " size", r.transformed[i].size() == input[i].size() * cube);
      rec.check(tag + " predicted size", size.tile_cells[i] == BigInt(r.transformed[i].size()));
    }
  });
  rec.guarded("unit cell reproduces S", [&] {
    const auto r = simulate_set({LatticeTile(3, {Point{0, 0, 0}})});
    rec.check("unit cell reproduces S", r.transformed.front() == r.s_tile);
  });
}

void blockers_suite(Recorder& rec, const SuiteParams&) {
  for (const auto& v : blocker_truth_table()) {
    const bool expected = !(v.alpha && v.beta && v.gamma);
    rec.check("blockers " + std::to_string(v.alpha) + std::to_string(v.beta) + std::to_string(v.gamma),
              v.tileable == expected, v.tileable ? "tileable, expected untileable" : "untileable, expected tileable");
  }
}

void towers_suite(Recorder& rec, const SuiteParams& p) {
  for (int n : p.tower_n) {
    if (std::gcd(n, 6) != 1) throw Error("tower suite needs gcd(n, 6) = 1, got n = " + std::to_string(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          const bool expected = !(a == b && b == c);
          const bool got = tower_check(n, a, b, c);
          rec.check("towers n=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")",
                    got == expected, got ? "tileable, expected untileable" : "untileable, expected tileable");
        }
      }
    }
  }
}

void boardgames_suite(Recorder& rec, const SuiteParams&) {
  for (const auto& sample : domino_samples()) {
    rec.guarded(sample.name, [&] {
      rec.check(sample.name + " domino solution", check_domino(sample.rules, sample.solution));
      const auto s = encode_domino(sample.rules, sample.n, true);
      rec.check(sample.name + " cyclic", validate_cyclic(s));
      const auto reps = encoding_representatives(sample.rules);
      bool sizes = true;
      for (std::size_t i = 0; i < 4; ++i) {
        sizes = sizes && s.rules[i].size() == static_cast<std::size_t>(sample.n) * reps[i].size();
      }
      rec.check(sample.name + " orbit sizes", sizes);
      for (int delta : {0, 1}) {
        const std::string tag = sample.name + " delta=" + std::to_string(delta);
        const auto lifted = lift_solution(sample.rules, sample.solution, sample.n, delta);
        rec.check(tag + " lifted solves", check_triomino(s, lifted));
        GridAssignment shifted = lifted;
        for (int x = 0; x < lifted.px(); ++x) {
          for (int y = 0; y < lifted.py(); ++y) shifted.set(x, y, (lifted.at(x, y) + 2) % sample.n);
        }
        rec.check(tag + " shift invariance", check_triomino(s, shifted));
        const auto back = project_solution(s, sample.rules, lifted);
        rec.check(tag + " round trip", same_function(back.grid, sample.solution) && back.delta == delta);
        const auto back_shifted = project_solution(s, sample.rules, shifted);
        rec.check(tag + " round trip after shift",
                  same_function(back_shifted.grid, sample.solution) && back_shifted.shift == 2);
      }
    });
  }
}

void gadgets_suite(Recorder& rec, const SuiteParams& p) {
  const auto s = sample_triomino_set();
  const auto forbidden = sample_forbidden_triples();
  rec.guarded("sample gadgets", [&] {
    const auto g = build_gadgets(s);
    const int n = g.n, m = g.m;
    rec.check("m = 4", m == 4, "m = " + std::to_string(m));
    const std::size_t b0 = static_cast<std::size_t>((3 * m + 2) * 5 * 6 * n - 8 * m * 6 * n);
    rec.check("empty brick size", g.empty_brick.size() == b0);
    rec.check("filler size", g.filler.size() == 16u);
    const auto cert = realize_tiling(s, g, GridAssignment(1, 1, 0));
    const auto v = verify(cert);
    rec.check("constant solution certificate", v.ok, v.violation);
    std::size_t bricks = 0, fillers = 0;
    for (const auto& pl : cert.placements) (pl.tile_id == 0 ? bricks : fillers)++;
    rec.check("cell accounting", bricks * g.brick.size() + fillers * g.filler.size() == cert.region.volume());

    // Three bricks whose values realize the forbidden S_1 triple around pole 1.
    const Triple f = forbidden[0];
    const std::vector<Point> offsets{Point{0, 0, 6 * f.a}, Point{g.brick_width(), 0, 6 * f.b}, Point{0, 5, 6 * f.c}};
    const auto centre = g.pole_center(1);
    const auto column = pole_column(g, offsets, centre[0], centre[1]);
    rec.check("forbidden column is UNSAT", solve(column, {line({0, n})}).unsat());

    if (p.scaled) {
      const auto d = decorate_gadgets(g);
      rec.check("brick3 size", d.brick3->size() == 27 * g.brick.size());
      rec.check("filler3 size", d.filler3->size() == 27 * g.filler.size());
      const auto c3 = realize_tiling(s, d, GridAssignment(1, 1, 0), true);
      rec.check("scaled certificate", verify(c3).ok, verify(c3).violation);
    }
  });
}

void solver_oracle_suite(Recorder& rec, const SuiteParams& p) {
  auto run = [&rec](const SolverCase& c) {
    rec.guarded(c.name, [&] {
      const auto res = solve(c.region, c.tiles);
      const bool expected = oracle::brute_force_tileable(c.region, c.tiles);
      if (res.status == SolveStatus::resource_exhausted) {
        rec.check(c.name, false, "solver ran out of budget: " + res.message);
        return;
      }
      std::string detail = res.sat() ? "solver SAT, oracle UNSAT" : "solver UNSAT, oracle SAT";
      bool ok = res.sat() == expected;
      if (ok && res.sat()) {
        const auto v = verify(*res.certificate);
        ok = v.ok;
        detail = "certificate rejected: " + v.violation;
      }
      rec.check(c.name, ok, detail);
    });
  };
  for (const auto& c : one_dim_cases(p.seed, 100)) run(c);
  for (const auto& c : random_cases(p.seed, p.oracle_cases)) run(c);
}

using SuiteFn = void (*)(Recorder&, const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites{
      {"partition", partition_suite}, {"simulate", simulate_suite},     {"blockers", blockers_suite},
      {"towers", towers_suite},       {"boardgames", boardgames_suite}, {"gadgets", gadgets_suite},
      {"solver-oracle", solver_oracle_suite},
  };
  return kSuites;
}

}  // namespace

Json SuiteReport::to_json() const {
  Json fails = Json::array();
  for (const auto& f : failures) fails.push_back({{"case", f.case_name}, {"detail", f.detail}, {"repro", f.repro}});
  return {{"suite", name}, {"cases", cases}, {"failures", fails}, {"seconds", seconds}, {"ok", ok()}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return kNames;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  if (params.m_max < 1 || params.m_max > 40) throw Error("m_max must be in 1..40");
  if (params.m_max_high < 1 || params.m_max_high > 6) throw Error("m_max_high must be in 1..6");
  if (params.oracle_cases < 0 || params.oracle_cases > 100'000) throw Error("oracle_cases must be in 0..100000");
  for (int n : params.tower_n) {
    if (n < 1 || n > 61 || std::gcd(n, 6) != 1) throw Error("tower moduli must be coprime to 6 and at most 61");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.name = name;
  Recorder rec(report, repro_command(name, params));
  bool found = false;
  for (const auto& [suite, fn] : registry()) {
    if (name == suite || name == "all") {
      fn(rec, params);
      found = true;
    }
  }
  if (!found) throw Error("unknown suite '" + name + "'");
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace tileforge
