#include "pcenter/cuts.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcenter {

lp::Row LiftedCut::to_row(int z_var) const {
  lp::Row row;
  row.sense = lp::Sense::GE;
  row.rhs = anchor_radius;
  row.entries.reserve(coeffs.size() + 1);
  row.entries.push_back({z_var, 1.0});
  for (const auto& e : coeffs) row.entries.push_back(e);
  return row;
}

LiftedCut build_cut(const Instance& inst, int i, int j, double lift_bound) {
  const double r = inst.distance(i, j);
  if (!(r > lift_bound))
    throw std::invalid_argument(
        "build_cut: anchor distance must exceed the lift bound; emit z >= LB "
        "instead");
  LiftedCut cut;
  cut.customer = i;
  cut.anchor_site = j;
  cut.lift_bound = lift_bound;
  cut.anchor_radius = r;
  const int m = inst.n_sites();
  for (int s = 0; s < m; ++s) {
    const double clamped = std::max(lift_bound, inst.distance(i, s));
    if (clamped < r) cut.coeffs.push_back({s, r - clamped});
  }
  return cut;
}

SeparationResult max_violation(const Instance& inst, int i, double lift_bound,
                               std::span<const double> y_star, double z_star) {
  struct Cand {
    double clamped;
    int site;
    double weight;
  };
  std::vector<Cand> cands;
  const int m = inst.n_sites();
  for (int j = 0; j < m; ++j)
    if (y_star[j] > 0)
      cands.push_back({std::max(lift_bound, inst.distance(i, j)), j, y_star[j]});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.clamped != b.clamped ? a.clamped < b.clamped : a.site < b.site;
  });

  SeparationResult res;
  res.customer = i;
  res.touched_sites = static_cast<int>(cands.size());

  // Critical location: first position where the cumulative weight hits 1.
  double prefix = 0;
  std::size_t cross = cands.size();
  for (std::size_t k = 0; k < cands.size(); ++k) {
    prefix += cands[k].weight;
    if (prefix >= 1.0 - 1e-12) {
      cross = k;
      break;
    }
  }
  if (cross == cands.size()) {
    // Total weight below one; the precondition (sum y = p >= 1) rules this
    // out except for roundoff, where the farthest touched site maximizes.
    cross = cands.empty() ? 0 : cands.size() - 1;
    if (cands.empty()) {
      res.violation = lift_bound - z_star;
      return res;
    }
  }

  const double r = cands[cross].clamped;
  if (r <= lift_bound + 1e-15) {
    // Weight one is reached within the clamp; the cut collapses to z >= LB.
    res.violation = lift_bound - z_star;
    return res;
  }

  // Ties at the crossing distance: lowest site index anchors.
  std::size_t first = cross;
  while (first > 0 && cands[first - 1].clamped == r) --first;
  res.anchor_site = cands[first].site;

  double rhs = r;
  for (std::size_t k = 0; k < cands.size() && cands[k].clamped < r; ++k)
    rhs -= (r - cands[k].clamped) * cands[k].weight;
  res.violation = rhs - z_star;
  return res;
}

}  // namespace pcenter
