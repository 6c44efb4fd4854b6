#pragma once

#include <span>
#include <vector>

#include "pcenter/instance.hpp"

namespace pcenter {

struct PrimalSolution {
  std::vector<int> sites;  // exactly p open sites
  double objective = 0;
};

/// Exact max-min coverage radius of the open set S; +inf for an empty S.
double eval_objective(const Instance& inst, std::span<const int> sites);

/// LP-guided greedy: walks the positive-weight sites in descending weight
/// order and opens a site whenever it strictly improves the objective,
/// making multiple passes until p sites are open.
PrimalSolution greedy_from_lp(const Instance& inst, std::span<const double> y_star,
                              int p);

/// Farthest-point sample of k customers, started from a seeded random
/// customer; ties go to the smallest index. Requires I = J.
std::vector<int> farthest_point_sample(const Instance& inst, int k,
                                       unsigned seed);

}  // namespace pcenter
