#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "tileforge/gadgets.hpp"
#include "tileforge/io.hpp"
#include "tileforge/partition.hpp"
#include "tileforge/samples.hpp"
#include "tileforge/simulate.hpp"
#include "tileforge/suites.hpp"
#include "tileforge/voxels.hpp"

using namespace tileforge;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t max_cells = 100'000'000;
  bool json = false;
};

void emit(const Globals& g, const Json& summary, const std::string& text) {
  if (g.json) {
    std::cout << summary.dump() << '\n';
  } else if (!text.empty()) {
    std::cout << text << '\n';
  }
}

void write_text(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << data;
}

void write_or_print(const std::string& path, const Json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(1) << '\n';
  } else {
    write_json_file(path, j);
  }
}

std::vector<LatticeTile> plain_tiles(const Json& j) {
  std::vector<LatticeTile> out;
  for (auto& t : tiles_from_json(j)) out.push_back(std::move(t.tile));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice tiling constructions and their checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized suites");
  app.add_option("--max-cells", g.max_cells, "Cell budget for materialized outputs and solver regions");
  app.add_flag("--json", g.json, "Print a JSON summary on stdout");

  int exit_code = 0;

  // partition
  auto* part_cmd = app.add_subcommand("partition", "Build the adjacent partition of the (m+2)-cube");
  std::size_t part_dim = 3;
  int part_m = 4;
  bool part_decorate = false;
  std::string part_out;
  part_cmd->add_option("--dim", part_dim, "Dimension (>= 3)")->check(CLI::Range(3, 8));
  part_cmd->add_option("--m", part_m, "Number of parts")->required()->check(CLI::PositiveNumber);
  part_cmd->add_flag("--decorate", part_decorate, "Emit the 3x decorated parts");
  part_cmd->add_option("--out", part_out, "Output tile list (default stdout)");
  part_cmd->callback([&] {
    const auto part = partition_cube(part_dim, part_m);
    validate_partition(part);
    Json tiles = Json::array();
    std::vector<LatticeTile> parts = part.parts;
    if (part_decorate) parts = decorate(part).parts;
    for (std::size_t i = 0; i < parts.size(); ++i) tiles.push_back(tile_to_json(parts[i], "Q" + std::to_string(i + 1)));
    write_or_print(part_out, tiles);
    const bool inner = check_internal_adjacency(part).ok;
    const bool outer = check_external_adjacency(part).ok;
    emit(g, {{"dim", part_dim}, {"m", part_m}, {"internal", inner}, {"external", outer}},
         part_out.empty() ? "" : "wrote " + std::to_string(parts.size()) + " parts to " + part_out);
  });

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Replace tiles by connected tiles with the same tilings");
  std::string sim_in, sim_out;
  bool sim_dry = false;
  sim_cmd->add_option("--in", sim_in, "Input tile list")->required();
  sim_cmd->add_option("--out", sim_out, "Output tile list (default stdout)");
  sim_cmd->add_flag("--dry-run", sim_dry, "Only report the output sizes");
  sim_cmd->callback([&] {
    const auto named = tiles_from_json(read_json_file(sim_in));
    std::vector<LatticeTile> tiles;
    for (const auto& t : named) tiles.push_back(t.tile);
    const auto size = simulation_size(tiles);
    if (sim_dry) {
      std::cout << size_to_json(size).dump(1) << '\n';
      return;
    }
    const auto r = simulate_set(tiles, g.max_cells);
    Json out = Json::array();
    for (std::size_t i = 0; i < r.transformed.size(); ++i) {
      const std::string name = named[i].name.empty() ? "P" + std::to_string(i + 1) : named[i].name;
      out.push_back(tile_to_json(r.transformed[i], name + "'"));
    }
    write_or_print(sim_out, out);
    emit(g, size_to_json(size), sim_out.empty() ? "" : "wrote " + std::to_string(out.size()) + " tiles to " + sim_out);
  });

  // encode
  auto* enc_cmd = app.add_subcommand("encode", "Encode a domino set as a cyclic triomino set");
  std::string enc_in, enc_out, enc_solution, enc_lifted;
  int enc_n = 0, enc_delta = 0;
  bool enc_gcd = false, enc_reps = false;
  enc_cmd->add_option("--domino", enc_in, "Domino set JSON")->required();
  enc_cmd->add_option("--n", enc_n, "Modulus (default: smallest n >= 2m+1 coprime to 6)");
  enc_cmd->add_flag("--require-gcd6", enc_gcd, "Reject moduli not coprime to 6");
  enc_cmd->add_flag("--representatives", enc_reps, "Store one triple per orbit with cyclic_closure");
  enc_cmd->add_option("--out", enc_out, "Triomino set JSON (default stdout)");
  enc_cmd->add_option("--solution", enc_solution, "Domino solution grid to lift");
  enc_cmd->add_option("--lifted-out", enc_lifted, "Where to write the lifted triomino grid");
  enc_cmd->add_option("--delta", enc_delta, "Parity class of the lifted values")->check(CLI::Range(0, 1));
  enc_cmd->callback([&] {
    const auto r = domino_from_json(read_json_file(enc_in));
    const int n = enc_n > 0 ? enc_n : gadget_modulus(r.m);
    const auto s = encode_domino(r, n, enc_gcd);
    write_or_print(enc_out, triomino_to_json(s, enc_reps));
    Json summary = {{"n", n}, {"m", r.m}};
    if (!enc_solution.empty()) {
      const auto lifted = lift_solution(r, grid_from_json(read_json_file(enc_solution)), n, enc_delta);
      const bool ok = check_triomino(s, lifted);
      summary["lifted_valid"] = ok;
      if (!enc_lifted.empty()) write_json_file(enc_lifted, grid_to_json(lifted));
      if (!ok) exit_code = 1;
    }
    emit(g, summary, enc_out.empty() ? "" : "wrote triomino set (n = " + std::to_string(n) + ") to " + enc_out);
  });

  // gadgets
  auto* gad_cmd = app.add_subcommand("gadgets", "Build the brick and filler for a cyclic triomino set");
  std::string gad_in, gad_out;
  bool gad_scaled = false;
  gad_cmd->add_option("--triomino", gad_in, "Triomino set JSON")->required();
  gad_cmd->add_option("--out", gad_out, "Gadget JSON (default stdout)");
  gad_cmd->add_flag("--scaled", gad_scaled, "Also emit the decorated 3x brick and filler");
  gad_cmd->callback([&] {
    auto gs = build_gadgets(triomino_from_json(read_json_file(gad_in)));
    if (gad_scaled) gs = decorate_gadgets(std::move(gs));
    write_or_print(gad_out, gadgets_to_json(gs));
    emit(g, {{"n", gs.n}, {"m", gs.m}, {"brick_cells", gs.brick.size()}, {"filler_cells", gs.filler.size()}},
         gad_out.empty() ? "" : "wrote gadgets (m = " + std::to_string(gs.m) + ") to " + gad_out);
  });

  // realize
  auto* real_cmd = app.add_subcommand("realize", "Turn a triomino solution into a tiling certificate");
  std::string real_in, real_solution, real_out;
  bool real_scaled = false;
  real_cmd->add_option("--triomino", real_in, "Triomino set JSON")->required();
  real_cmd->add_option("--solution", real_solution, "Periodic solution grid JSON")->required();
  real_cmd->add_option("--out", real_out, "Certificate JSON (default stdout)");
  real_cmd->add_flag("--scaled", real_scaled, "Use the decorated 3x brick and filler");
  real_cmd->callback([&] {
    const auto s = triomino_from_json(read_json_file(real_in));
    const auto grid = grid_from_json(read_json_file(real_solution));
    if (!check_triomino(s, grid)) throw Error("solution grid violates the triomino rules");
    auto gs = build_gadgets(s);
    if (real_scaled) gs = decorate_gadgets(std::move(gs));
    const auto cert = realize_tiling(s, gs, grid, real_scaled);
    write_or_print(real_out, certificate_to_json(cert));
    emit(g, {{"placements", cert.placements.size()}, {"dims", cert.region.dims}, {"verified", true}},
         real_out.empty() ? "" : "wrote verified certificate with " + std::to_string(cert.placements.size()) +
                                     " placements to " + real_out);
  });

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact-cover tiling search");
  std::string solve_region, solve_tiles, solve_out;
  std::uint64_t solve_nodes = 0;
  solve_cmd->add_option("--region", solve_region, "Region JSON")->required();
  solve_cmd->add_option("--tiles", solve_tiles, "Tile list JSON")->required();
  solve_cmd->add_option("--out", solve_out, "Certificate JSON when SAT");
  solve_cmd->add_option("--max-nodes", solve_nodes, "Search node budget (0 = unlimited)");
  solve_cmd->callback([&] {
    const auto region = region_from_json(read_json_file(solve_region));
    SolveOptions opts;
    opts.max_cells = g.max_cells;
    opts.max_nodes = solve_nodes;
    const auto res = solve(region, plain_tiles(read_json_file(solve_tiles)), opts);
    const char* status = res.sat() ? "SAT" : res.unsat() ? "UNSAT" : "RESOURCE";
    if (res.sat() && !solve_out.empty()) write_json_file(solve_out, certificate_to_json(*res.certificate));
    Json summary = {{"status", status}, {"nodes", res.nodes}};
    if (!res.message.empty()) summary["message"] = res.message;
    emit(g, summary, std::string(status) + (res.message.empty() ? "" : ": " + res.message));
    exit_code = res.sat() ? 0 : res.unsat() ? 1 : 2;
  });

  // verify-suite
  auto* suite_cmd = app.add_subcommand("verify-suite", "Run a verification suite");
  std::string suite_name = "all";
  SuiteParams params;
  std::string report_out;
  suite_cmd->add_option("name", suite_name, "Suite name")->check(CLI::IsMember(suite_names()));
  suite_cmd->add_option("--m-max", params.m_max, "Largest m for the 3-D partition checks");
  suite_cmd->add_option("--m-max-high", params.m_max_high, "Largest m for the 4-D and 5-D partition checks");
  suite_cmd->add_option("--tower-n", params.tower_n, "Tower moduli")->delimiter(',');
  suite_cmd->add_option("--oracle-cases", params.oracle_cases, "Random 2-D/3-D solver cases");
  suite_cmd->add_flag("--scaled", params.scaled, "Also realize the decorated gadgets");
  suite_cmd->add_option("--report", report_out, "Write the JSON report here");
  suite_cmd->callback([&] {
    params.seed = g.seed;
    const auto report = run_suite(suite_name, params);
    if (!report_out.empty()) write_json_file(report_out, report.to_json());
    std::ostringstream text;
    text << report.name << ": " << report.cases << " cases, " << report.failures.size() << " failures, "
         << report.seconds << " s";
    for (const auto& f : report.failures) text << "\n  FAIL " << f.case_name << ": " << f.detail << "\n    " << f.repro;
    emit(g, report.to_json(), text.str());
    exit_code = report.ok() ? 0 : 1;
  });

  // export
  auto* exp_cmd = app.add_subcommand("export", "Write cells as xyz lines or an obj mesh");
  std::string exp_in, exp_out, exp_format = "xyz", exp_tile;
  exp_cmd->add_option("--in", exp_in, "Tile, tile list, gadget or certificate JSON")->required();
  exp_cmd->add_option("--format", exp_format, "xyz or obj");
  exp_cmd->add_option("--tile", exp_tile, "Tile name or index inside a list (default: first)");
  exp_cmd->add_option("--out", exp_out, "Output file (default stdout)");
  exp_cmd->callback([&] {
    const auto format = parse_voxel_format(exp_format);
    const Json j = read_json_file(exp_in);
    LatticeTile cells;
    if (j.is_object() && j.contains("placements")) {
      cells = certificate_cells(certificate_from_json(j));
    } else if (j.is_object() && j.contains("brick")) {
      cells = tile_from_json(j.at(exp_tile.empty() ? "brick" : exp_tile)).tile;
    } else {
      const auto tiles = tiles_from_json(j);
      if (tiles.empty()) throw Error("no tiles in " + exp_in);
      std::size_t pick = 0;
      if (!exp_tile.empty()) {
        pick = tiles.size();
        for (std::size_t i = 0; i < tiles.size(); ++i) {
          if (tiles[i].name == exp_tile || std::to_string(i) == exp_tile) pick = i;
        }
        if (pick == tiles.size()) throw Error("no tile named " + exp_tile);
      }
      cells = tiles[pick].tile;
    }
    write_text(exp_out, export_voxels(cells, format));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
