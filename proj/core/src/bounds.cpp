#include "pcenter/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pcenter/cuts.hpp"
#include "pcenter/lp.hpp"

namespace pcenter {

namespace {
constexpr double kViolationTol = 1e-6;
}

double pclb_value(const Instance& inst, int p, double lb, PclbVariant variant) {
  const int m = inst.n_sites();
  const int n = inst.n_customers();

  lp::Model model;
  for (int j = 0; j < m; ++j) model.add_var(0.0, 0.0, 1.0);
  const int z = model.add_var(1.0, -lp::kInf, lp::kInf);

  {
    lp::Row cardinality;
    cardinality.sense = lp::Sense::EQ;
    cardinality.rhs = p;
    for (int j = 0; j < m; ++j) cardinality.entries.push_back({j, 1.0});
    model.add_row(std::move(cardinality));
  }
  model.add_row({{{z, 1.0}}, lp::Sense::GE, lb});

  if (variant == PclbVariant::Reduced) {
    for (int i = 0; i < n; ++i) {
      int anchor = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < m; ++j) {
        const double d = inst.distance(i, j);
        if (d > lb && d < best) {
          best = d;
          anchor = j;
        }
      }
      // No site beyond LB: the customer is covered at radius <= LB already.
      if (anchor >= 0) model.add_row(build_cut(inst, i, anchor, lb).to_row(z));
    }
    const auto sol = lp::solve(model);
    if (sol.status != lp::Status::Optimal)
      throw std::runtime_error("pclb_value: LP did not solve to optimality");
    return sol.objective;
  }

  // Full variant via row generation against the separation oracle.
  lp::Basis basis;
  const int max_rounds = n * m + 16;
  for (int round = 0; round < max_rounds; ++round) {
    const auto sol = lp::solve(model, basis.empty() ? nullptr : &basis);
    if (sol.status != lp::Status::Optimal)
      throw std::runtime_error("pclb_value: LP did not solve to optimality");
    basis = sol.basis;
    const std::span<const double> y(sol.primal.data(), m);
    const double z_star = sol.primal[z];

    int added = 0;
    for (int i = 0; i < n; ++i) {
      const auto sep = max_violation(inst, i, lb, y, z_star);
      if (sep.violation > kViolationTol && sep.anchor_site >= 0) {
        model.add_row(build_cut(inst, i, sep.anchor_site, lb).to_row(z));
        ++added;
      }
    }
    if (added == 0) return sol.objective;
  }
  throw std::runtime_error("pclb_value: row generation failed to converge");
}

BoundReport iterate_lb_sharp(const Instance& inst, int p, PclbVariant variant) {
  const RadiusSet radii = inst.candidate_radii(std::size_t{100'000'000});
  BoundReport report;

  double lb = radii.values.front();
  const int max_iter = static_cast<int>(radii.size()) + 1;
  for (int it = 0; it < max_iter; ++it) {
    const double value = pclb_value(inst, p, lb, variant);
    const double snapped = radii.snap_up(value);
    report.per_iteration.push_back({lb, value, snapped});
    ++report.iterations;
    if (snapped <= lb + 1e-9) break;
    lb = snapped;
  }
  report.lb_sharp = lb;
  report.lb_star = lb_star(inst, p);
  report.scp_value_at_lb_sharp = scp_lp_value(inst, lb);
  return report;
}

double scp_lp_value(const Instance& inst, double radius) {
  const int m = inst.n_sites();
  const int n = inst.n_customers();

  lp::Model model;
  for (int j = 0; j < m; ++j) model.add_var(1.0, 0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    lp::Row cover;
    cover.sense = lp::Sense::GE;
    cover.rhs = 1.0;
    for (int j = 0; j < m; ++j)
      if (inst.distance(i, j) <= radius + 1e-9)
        cover.entries.push_back({j, 1.0});
    if (cover.entries.empty())
      return std::numeric_limits<double>::infinity();
    model.add_row(std::move(cover));
  }
  const auto sol = lp::solve(model);
  if (sol.status != lp::Status::Optimal)
    throw std::runtime_error("scp_lp_value: LP did not solve to optimality");
  return sol.objective;
}

double lb_star(const Instance& inst, int p) {
  const RadiusSet radii = inst.candidate_radii(std::size_t{100'000'000});
  // scp_lp_value is nonincreasing in the radius.
  int lo = 0, hi = static_cast<int>(radii.size()) - 1;
  if (scp_lp_value(inst, radii.values[hi]) > p + 1e-6)
    throw std::runtime_error("lb_star: no feasible radius in D");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (scp_lp_value(inst, radii.values[mid]) <= p + 1e-6)
      hi = mid;
    else
      lo = mid + 1;
  }
  return radii.values[lo];
}

double pc1_lp_value(const Instance& inst, int p) {
  const int m = inst.n_sites();
  const int n = inst.n_customers();
  if (static_cast<long long>(n) * m > 10'000)
    throw SizeError("pc1_lp_value: instance too large for the dense LP");

  lp::Model model;
  // x_ij at i*m+j, then y_j, then z.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) model.add_var(0.0, 0.0, lp::kInf);
  const int y0 = n * m;
  for (int j = 0; j < m; ++j) model.add_var(0.0, 0.0, 1.0);
  const int z = model.add_var(1.0, -lp::kInf, lp::kInf);

  {
    lp::Row cardinality;
    cardinality.sense = lp::Sense::EQ;
    cardinality.rhs = p;
    for (int j = 0; j < m; ++j) cardinality.entries.push_back({y0 + j, 1.0});
    model.add_row(std::move(cardinality));
  }
  for (int i = 0; i < n; ++i) {
    lp::Row assign;
    assign.sense = lp::Sense::EQ;
    assign.rhs = 1.0;
    for (int j = 0; j < m; ++j) assign.entries.push_back({i * m + j, 1.0});
    model.add_row(std::move(assign));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      model.add_row({{{i * m + j, 1.0}, {y0 + j, -1.0}}, lp::Sense::LE, 0.0});
  for (int i = 0; i < n; ++i) {
    lp::Row radius;
    radius.sense = lp::Sense::LE;
    radius.rhs = 0.0;
    for (int j = 0; j < m; ++j) {
      const double d = inst.distance(i, j);
      if (d != 0) radius.entries.push_back({i * m + j, d});
    }
    radius.entries.push_back({z, -1.0});
    model.add_row(std::move(radius));
  }

  const auto sol = lp::solve(model);
  if (sol.status != lp::Status::Optimal)
    throw std::runtime_error("pc1_lp_value: LP did not solve to optimality");
  return sol.objective;
}

double pc2_lp_value(const Instance& inst, int p) {
  return pclb_value(inst, p, 0.0, PclbVariant::Full);
}

std::vector<std::vector<double>> projection_witness(const Instance& inst,
                                                    std::span<const double> y,
                                                    double /*z*/) {
  const int m = inst.n_sites();
  const int n = inst.n_customers();
  std::vector<std::vector<double>> x(n, std::vector<double>(m, 0.0));

  std::vector<int> order(m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return inst.distance(i, a) < inst.distance(i, b);
    });

    // Walk distance groups until the cumulative weight reaches one; the
    // crossing group is split proportionally.
    double before = 0;
    int k = 0;
    while (k < m) {
      const double level = inst.distance(i, order[k]);
      double group = 0;
      int k2 = k;
      while (k2 < m && inst.distance(i, order[k2]) == level) {
        group += y[order[k2]];
        ++k2;
      }
      if (before + group >= 1.0 - 1e-12) {
        for (int t = 0; t < k; ++t) x[i][order[t]] = y[order[t]];
        const double scale = (1.0 - before) / group;
        for (int t = k; t < k2; ++t) x[i][order[t]] = y[order[t]] * scale;
        break;
      }
      before += group;
      k = k2;
    }
    if (k >= m)
      throw std::invalid_argument(
          "projection_witness: total weight below one");
  }
  return x;
}

}  // namespace pcenter
