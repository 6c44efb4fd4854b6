#include "pcenter/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "pcenter/heuristic.hpp"

namespace pcenter {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) return r;
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace

OracleResult brute_force(const Instance& inst, int p, std::uint64_t cap) {
  const int m = inst.n_sites();
  if (p < 1 || p > m) throw SizeError("brute_force: bad p");
  if (binomial(m, p) > cap)
    throw SizeError("brute_force: C(m,p) exceeds the subset cap");

  OracleResult res;
  res.optimum = std::numeric_limits<double>::infinity();

  std::vector<int> subset(p);
  for (int i = 0; i < p; ++i) subset[i] = i;
  for (;;) {
    ++res.enumerated;
    const double obj = eval_objective(inst, subset);
    if (obj < res.optimum) {
      res.optimum = obj;
      res.sites = subset;
    }
    // next lexicographic p-subset
    int i = p - 1;
    while (i >= 0 && subset[i] == m - p + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < p; ++j) subset[j] = subset[j - 1] + 1;
  }
  return res;
}

Instance random_instance(int n, int p, unsigned seed, int max_weight) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> weight(1, max_weight);

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;

  // Random spanning tree keeps the graph connected, then extra edges.
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    const double w = weight(rng);
    d[u][v] = d[v][u] = std::min(d[u][v], w * 1.0);
  }
  const int extra = n;
  for (int e = 0; e < extra; ++e) {
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    const double w = weight(rng);
    if (w < d[u][v]) d[u][v] = d[v][u] = w;
  }

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == inf) continue;
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }

  return Instance::from_matrix(std::move(d), p, /*integral=*/true);
}

}  // namespace pcenter
