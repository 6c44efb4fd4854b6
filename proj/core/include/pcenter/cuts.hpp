#pragma once

#include <span>
#include <vector>

#include "pcenter/instance.hpp"
#include "pcenter/lp.hpp"

namespace pcenter {

/// One lifted optimality cut in sparse form:
///   z >= anchor_radius - sum_j coeffs[j] * y_j
/// with coefficient anchor_radius - max{lift_bound, d_ij'} for every site
/// j' whose clamped distance stays below the anchor radius. With
/// lift_bound = 0 this is the plain optimality constraint of the compact
/// formulation.
struct LiftedCut {
  int customer = -1;
  int anchor_site = -1;
  double lift_bound = 0;
  double anchor_radius = 0;
  std::vector<lp::Entry> coeffs;  // (site, positive coefficient)

  /// Right-hand side value at fractional weights y.
  double rhs_at(std::span<const double> y) const {
    double v = anchor_radius;
    for (const auto& e : coeffs) v -= e.coef * y[e.var];
    return v;
  }

  /// LP row z + sum coeffs*y >= anchor_radius, given the z column index.
  lp::Row to_row(int z_var) const;
};

struct SeparationResult {
  int customer = -1;
  double violation = 0;        // best RHS at y* minus z*
  int anchor_site = -1;        // critical location; -1: cut collapses to z>=LB
  int touched_sites = 0;       // positive-weight sites inspected
};

/// Builds the lifted cut for (customer i, anchor j). Requires d_ij > LB.
LiftedCut build_cut(const Instance& inst, int i, int j, double lift_bound);

/// Most violated lifted cut for customer i at (y*, z*): scans only sites
/// with positive weight in ascending clamped distance, stopping at the
/// critical location where the cumulative weight reaches one. An
/// anchor_site of -1 means the maximizer is the degenerate bound z >= LB
/// (every positive-weight site within the lift bound).
SeparationResult max_violation(const Instance& inst, int i, double lift_bound,
                               std::span<const double> y_star, double z_star);

}  // namespace pcenter
