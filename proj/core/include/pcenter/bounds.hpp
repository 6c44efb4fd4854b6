#pragma once

#include <span>
#include <vector>

#include "pcenter/instance.hpp"

namespace pcenter {

enum class PclbVariant { Full, Reduced };

struct BoundIteration {
  double lb_in = 0;
  double l_of_lb = 0;
  double snapped_lb = 0;
};

struct BoundReport {
  double lb_sharp = 0;
  int iterations = 0;
  std::vector<BoundIteration> per_iteration;
  double lb_star = 0;
  double scp_value_at_lb_sharp = 0;
};

/// Optimal value of the lifted-cut LP at lift bound LB. The full variant
/// generates one cut row per (customer, anchor) lazily until nothing is
/// violated beyond 1e-6; the reduced variant keeps a single row per
/// customer, anchored at its nearest site beyond LB.
double pclb_value(const Instance& inst, int p, double lb,
                  PclbVariant variant = PclbVariant::Full);

/// Iterates LB -> L(LB) snapped up to the candidate-radius set until the
/// value stops moving. Also computes the set-cover characterization for
/// cross-checking.
BoundReport iterate_lb_sharp(const Instance& inst, int p,
                             PclbVariant variant = PclbVariant::Full);

/// Optimal fractional set-cover value at the given radius:
/// min sum y  s.t.  sum_{j: d_ij <= radius} y_j >= 1 for all i, y in [0,1].
/// +inf when some customer has no site within the radius.
double scp_lp_value(const Instance& inst, double radius);

/// Least radius in D whose fractional set-cover value is at most p.
double lb_star(const Instance& inst, int p);

/// LP-relaxation value of the classical assignment formulation. Guarded
/// by a size cap; intended for comparator checks on small instances.
double pc1_lp_value(const Instance& inst, int p);

/// LP-relaxation value of the compact formulation (lift bound zero).
double pc2_lp_value(const Instance& inst, int p);

/// Constructs the assignment matrix certifying that (y, z) feasible for
/// the compact LP extends to the classical LP: weight is poured into
/// sites by increasing distance and split proportionally at the distance
/// where the cumulative weight reaches one.
std::vector<std::vector<double>> projection_witness(const Instance& inst,
                                                    std::span<const double> y,
                                                    double z);

}  // namespace pcenter
