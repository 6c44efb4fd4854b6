#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcenter/bounds.hpp"
#include "pcenter/engine.hpp"
#include "pcenter/oracle.hpp"
#include "pcenter/report.hpp"

namespace {

namespace fs = std::filesystem;
using namespace pcenter;

enum class LogLevel { Quiet, Info, Trace };

LogLevel log_level_from_env() {
  const char* env = std::getenv("PCENTER_LOG");
  if (!env) return LogLevel::Info;
  const std::string v = env;
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "trace") return LogLevel::Trace;
  return LogLevel::Info;
}

struct SolveArgs {
  std::string instance;
  std::string format = "pmed";
  int p = 0;
  std::string scheme = "maxviolated";
  std::string heuristic = "on";
  std::string lifting = "on";
  double time_limit = 1800.0;
  unsigned seed = 1;
  std::string out = "csv";
  bool verbose = false;
};

Instance load(const std::string& path, const std::string& format) {
  if (format == "pmed") return Instance::load_pmed(path);
  return Instance::load_tsplib(path);
}

SolverConfig make_config(const SolveArgs& a, LogLevel level) {
  SolverConfig cfg;
  cfg.scheme =
      a.scheme == "fixedcustomer" ? Scheme::FixedCustomer : Scheme::MaxViolated;
  cfg.use_heuristic = a.heuristic == "on";
  cfg.use_lifting = a.lifting == "on";
  cfg.time_limit = a.time_limit;
  cfg.seed = a.seed;
  cfg.verbose = a.verbose || level == LogLevel::Trace;
  cfg.log = &std::cerr;
  return cfg;
}

int emit_and_exit(const RunRecord& rec, const std::string& out) {
  std::vector<RunRecord> rows{rec};
  if (out == "json")
    write_json(std::cout, rows);
  else
    write_csv(std::cout, rows);
  return rec.status == "optimal" ||
                 (rec.status == "time_limit" && !rec.sites.empty())
             ? 0
             : 1;
}

int cmd_solve(const SolveArgs& a, LogLevel level) {
  Instance inst = load(a.instance, a.format);
  int p = a.p > 0 ? a.p : inst.p();
  if (p < 1) {
    std::cerr << "error: this format does not carry p; pass --p\n";
    return 2;
  }
  const SolveResult res = solve(inst, p, make_config(a, level));
  const std::string name = fs::path(a.instance).stem().string();
  return emit_and_exit(make_record(name, inst, p, res, a.scheme), a.out);
}

int cmd_boundlab(const SolveArgs& a) {
  Instance inst = load(a.instance, a.format);
  int p = a.p > 0 ? a.p : inst.p();
  if (p < 1) {
    std::cerr << "error: this format does not carry p; pass --p\n";
    return 2;
  }
  BoundReport report = iterate_lb_sharp(inst, p);
  const std::string name = fs::path(a.instance).stem().string();
  write_bound_report(std::cout, name, report);

  // Relaxation comparison on instances small enough for the dense LP.
  const long long cells =
      static_cast<long long>(inst.n_customers()) * inst.n_sites();
  if (cells <= 10'000) {
    const double v1 = pc1_lp_value(inst, p);
    const double v2 = pc2_lp_value(inst, p);
    std::cout << "relaxations: assignment-LP " << v1 << "  compact-LP " << v2
              << "\n";
  }
  return 0;
}

int cmd_oracle(const SolveArgs& a) {
  Instance inst = load(a.instance, a.format);
  int p = a.p > 0 ? a.p : inst.p();
  if (p < 1) {
    std::cerr << "error: this format does not carry p; pass --p\n";
    return 2;
  }
  const OracleResult res = brute_force(inst, p);
  std::cout << "optimum " << res.optimum << " over " << res.enumerated
            << " subsets; sites";
  for (int j : res.sites) std::cout << ' ' << j;
  std::cout << "\n";
  return 0;
}

int cmd_bench(const std::string& dir, const SolveArgs& a, LogLevel level) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<RunRecord> rows;
  for (const auto& f : files) {
    try {
      Instance inst = load(f.string(), a.format);
      const int p = a.p > 0 ? a.p : inst.p();
      if (p < 1) {
        std::cerr << "skip " << f.filename().string() << ": no p\n";
        continue;
      }
      const SolveResult res = solve(inst, p, make_config(a, level));
      rows.push_back(
          make_record(f.stem().string(), inst, p, res, a.scheme));
      if (level != LogLevel::Quiet)
        std::cerr << f.stem().string() << ": " << rows.back().status << " UB "
                  << rows.back().ub << " in " << rows.back().time << "s\n";
    } catch (const std::exception& e) {
      std::cerr << "skip " << f.filename().string() << ": " << e.what() << "\n";
    }
  }
  write_csv(std::cout, rows);
  return 0;
}

void add_common_flags(CLI::App* app, SolveArgs& a, bool instance_required) {
  if (instance_required)
    app->add_option("--instance", a.instance, "instance file")->required();
  app->add_option("--format", a.format, "input format")
      ->check(CLI::IsMember({"pmed", "tsplib"}));
  app->add_option("--p", a.p, "number of centers (required for tsplib)");
  app->add_option("--seed", a.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  const LogLevel level = log_level_from_env();
  CLI::App app{"Exact vertex p-center solver"};
  app.require_subcommand(1);

  SolveArgs a;
  std::string bench_dir;

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one instance");
  add_common_flags(solve_cmd, a, true);
  solve_cmd->add_option("--scheme", a.scheme, "cut-separation scheme")
      ->check(CLI::IsMember({"maxviolated", "fixedcustomer"}));
  solve_cmd->add_option("--heuristic", a.heuristic, "LP-guided greedy")
      ->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_option("--lifting", a.lifting, "cut lifting")
      ->check(CLI::IsMember({"on", "off"}));
  solve_cmd->add_option("--time-limit", a.time_limit, "seconds");
  solve_cmd->add_option("--out", a.out, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  solve_cmd->add_flag("--verbose", a.verbose, "per-iteration JSON on stderr");

  CLI::App* bound_cmd = app.add_subcommand("boundlab", "lower-bound iteration");
  add_common_flags(bound_cmd, a, true);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration");
  add_common_flags(oracle_cmd, a, true);

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "batch-solve a directory to CSV");
  bench_cmd->add_option("--dir", bench_dir, "instance directory")->required();
  add_common_flags(bench_cmd, a, false);
  bench_cmd->add_option("--scheme", a.scheme, "cut-separation scheme")
      ->check(CLI::IsMember({"maxviolated", "fixedcustomer"}));
  bench_cmd->add_option("--time-limit", a.time_limit, "seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(a, level);
    if (bound_cmd->parsed()) return cmd_boundlab(a);
    if (oracle_cmd->parsed()) return cmd_oracle(a);
    if (bench_cmd->parsed()) return cmd_bench(bench_dir, a, level);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
