// nlbox: principle reports, slice scans, macroscopic-locality sweeps and the
// inner-product game for two-input/two-output boxes.
//
//   nlbox report  --preset iso:0.72 [--ml 1,3,5]
//   nlbox report  --box box.json
//   nlbox scan    --slice pr-d-i --gamma-steps 21 --beta-steps 21 [--jobs 4]
//   nlbox ml-sweep --n 1,3,5,7,9 --gamma-steps 101
//   nlbox ip-game --preset iso:0.8 --bits 5 --trials 100000 --seed 7
//
// Exit codes: 0 ok, 1 internal error, 2 bad input.

#include "nlbox/json_io.hpp"
#include "nlbox/principles.hpp"
#include "nlbox/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoxSource {
  std::string file;
  std::string preset;
};

std::pair<nlbox::Box, std::string> load_box(const BoxSource& src) {
  if (!src.file.empty() && !src.preset.empty()) throw BadInput("use either --box or --preset, not both");
  if (!src.preset.empty()) return {nlbox::box_from_preset(src.preset), src.preset};
  if (src.file.empty()) throw BadInput("a box is required: --box <file> or --preset <name>");
  std::ifstream in(src.file);
  if (!in) throw BadInput("cannot open " + src.file);
  return {nlbox::box_from_json(nlohmann::json::parse(in)), src.file};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw BadInput("cannot write " + out_path);
  out << text;
}

void add_box_options(CLI::App* cmd, BoxSource& src) {
  cmd->add_option("--box", src.file, "Box JSON file {\"p\": [[..],[..],[..],[..]]}");
  cmd->add_option("--preset", src.preset, "pr1 | pr:<0..7> | noise | iso:<gamma> | det:<a0a1b0b1>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principle checks for bipartite two-input/two-output boxes"};
  app.require_subcommand(1);

  double tol = nlbox::tol::kVerdict;
  std::uint64_t seed = 1;
  std::string out_path;
  int jobs = 1;
  app.add_option("--tol", tol, "Verdict tolerance")->capture_default_str();
  app.add_option("--seed", seed, "Random seed (ip-game)")->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads for grid evaluation")->capture_default_str();

  BoxSource report_src;
  std::vector<int> ml_copies;
  auto* report = app.add_subcommand("report", "JSON report of every principle for one box");
  add_box_options(report, report_src);
  report->add_option("--ml", ml_copies, "Macroscopic copy counts to evaluate")->delimiter(',');

  nlbox::ScanGrid grid;
  auto* scan = app.add_subcommand("scan", "CSV scan of a two-parameter polytope slice");
  scan->add_option("--slice", grid.slice, "pr-d-i | pr-l12-i | noise")->capture_default_str();
  scan->add_option("--gamma-steps", grid.gamma_steps)->capture_default_str();
  scan->add_option("--beta-steps", grid.beta_steps)->capture_default_str();

  std::vector<int> sweep_n{1, 3, 5, 7, 9};
  int sweep_steps = 101;
  auto* sweep = app.add_subcommand("ml-sweep", "CSV of macroscopic M* for isotropic boxes");
  sweep->add_option("--n", sweep_n, "Odd copy counts")->delimiter(',')->capture_default_str();
  sweep->add_option("--gamma-steps", sweep_steps)->capture_default_str();

  BoxSource game_src;
  int bits = 16;
  std::int64_t trials = 10000;
  auto* game = app.add_subcommand("ip-game", "Monte Carlo inner-product parity game");
  add_box_options(game, game_src);
  game->add_option("--bits", bits)->capture_default_str();
  game->add_option("--trials", trials)->capture_default_str();

  // Subcommand-local copies of the common flags are also accepted.
  for (auto* cmd : {report, scan, sweep, game}) {
    cmd->add_option("--tol", tol);
    cmd->add_option("--out", out_path);
    cmd->add_option("--jobs", jobs);
    cmd->add_option("--seed", seed);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*report) {
      const auto [box, id] = load_box(report_src);
      nlbox::ReportOptions opts;
      opts.tol = tol;
      opts.ml_copies = ml_copies;
      emit(nlbox::report_box(box, id, opts).dump(2) + "\n", out_path);
    } else if (*scan) {
      emit(nlbox::scan_slice(grid, tol, jobs), out_path);
    } else if (*sweep) {
      emit(nlbox::sweep_ml(sweep_n, sweep_steps, jobs), out_path);
    } else if (*game) {
      const auto [box, id] = load_box(game_src);
      const auto res = nlbox::ntcc_ip_game(box, bits, trials, seed);
      const nlohmann::json j{{"id", id},         {"n_bits", bits},           {"trials", res.trials},
                             {"seed", seed},     {"successes", res.successes}, {"empirical", res.empirical},
                             {"analytic", res.analytic}};
      emit(j.dump(2) + "\n", out_path);
    }
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
