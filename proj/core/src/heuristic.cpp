#include "pcenter/heuristic.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace pcenter {

namespace {
constexpr double kInfObj = std::numeric_limits<double>::infinity();
}

double eval_objective(const Instance& inst, std::span<const int> sites) {
  if (sites.empty()) return kInfObj;
  double worst = 0;
  for (int i = 0; i < inst.n_customers(); ++i) {
    double best = kInfObj;
    for (int j : sites) best = std::min(best, inst.distance(i, j));
    worst = std::max(worst, best);
  }
  return worst;
}

PrimalSolution greedy_from_lp(const Instance& inst,
                              std::span<const double> y_star, int p) {
  const int m = inst.n_sites();
  const int n = inst.n_customers();

  std::vector<int> order;
  for (int j = 0; j < m; ++j)
    if (y_star[j] > 0) order.push_back(j);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return y_star[a] > y_star[b]; });
  if (static_cast<int>(order.size()) < p) {
    std::vector<char> used(m, 0);
    for (int j : order) used[j] = 1;
    for (int j = 0; j < m && static_cast<int>(order.size()) < p; ++j)
      if (!used[j]) order.push_back(j);
  }

  std::vector<char> open(m, 0);
  std::vector<double> serve(n, kInfObj);  // current min distance per customer
  double obj = kInfObj;
  int opened = 0;

  auto obj_with = [&](int j) {
    double worst = 0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::min(serve[i], inst.distance(i, j)));
    return worst;
  };
  auto open_site = [&](int j) {
    open[j] = 1;
    ++opened;
    for (int i = 0; i < n; ++i)
      serve[i] = std::min(serve[i], inst.distance(i, j));
    obj = *std::max_element(serve.begin(), serve.end());
  };

  while (opened < p) {
    bool added = false;
    for (int j : order) {
      if (opened == p) break;
      if (open[j]) continue;
      if (obj_with(j) < obj) {
        open_site(j);
        added = true;
      }
    }
    if (opened < p && !added) {
      // A stalled pass: take the unopened site with the best objective.
      int best_j = -1;
      double best = kInfObj;
      for (int j : order)
        if (!open[j] && obj_with(j) < best) {
          best = obj_with(j);
          best_j = j;
        }
      open_site(best_j);
    }
  }

  PrimalSolution sol;
  for (int j = 0; j < m; ++j)
    if (open[j]) sol.sites.push_back(j);
  sol.objective = eval_objective(inst, sol.sites);
  return sol;
}

std::vector<int> farthest_point_sample(const Instance& inst, int k,
                                       unsigned seed) {
  const int n = inst.n_customers();
  if (k < 1 || k > n) throw SizeError("farthest_point_sample: bad k");

  std::mt19937 rng(seed);
  const int start = std::uniform_int_distribution<int>(0, n - 1)(rng);

  std::vector<int> sample{start};
  std::vector<char> in_sample(n, 0);
  in_sample[start] = 1;
  std::vector<double> dist(n);
  for (int i = 0; i < n; ++i) dist[i] = inst.distance(i, start);

  while (static_cast<int>(sample.size()) < k) {
    int arg = -1;
    double best = -1;
    for (int i = 0; i < n; ++i)
      if (!in_sample[i] && dist[i] > best) {
        best = dist[i];
        arg = i;
      }
    sample.push_back(arg);
    in_sample[arg] = 1;
    for (int i = 0; i < n; ++i)
      dist[i] = std::min(dist[i], inst.distance(i, arg));
  }
  return sample;
}

}  // namespace pcenter
