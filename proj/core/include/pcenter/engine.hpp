#pragma once

#include <iosfwd>

#include "pcenter/heuristic.hpp"
#include "pcenter/instance.hpp"

namespace pcenter {

enum class Scheme { MaxViolated, FixedCustomer };

struct SolverConfig {
  Scheme scheme = Scheme::MaxViolated;
  bool use_heuristic = true;
  /// Plain-cut mode keeps every lift bound at zero (for contrast runs).
  bool use_lifting = true;
  int max_num_cuts_root = 100;
  int max_num_cuts_tree = 50;
  int max_num_sep_root = 1000;
  int max_num_sep_tree = 1;
  int max_no_improvements = 100;
  int max_no_improvements_fixed = 5;
  double epsilon_improve = 1e-5;
  double violation_tol = 1e-6;
  double time_limit = 1800.0;
  unsigned seed = 1;
  bool verbose = false;
  std::ostream* log = nullptr;  // line-delimited JSON progress when verbose
};

enum class SolveStatus { Optimal, TimeLimit, Infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  PrimalSolution best_solution;
  double lower_bound = 0;
  double gap_percent = 0;  // (UB - LB) / UB * 100
  long nodes = 0;
  long cuts_added = 0;
  double wall_time = 0;
};

/// Branch-and-cut over the compact formulation with lifted optimality
/// cuts: best-bound node selection, scheme-driven separation rounds with
/// a purgeable global pool at the root and subtree-local cuts below it,
/// lazy feasibility cuts for integer candidates, LP-guided greedy
/// incumbents.
SolveResult solve(const Instance& inst, int p, const SolverConfig& config);

}  // namespace pcenter
