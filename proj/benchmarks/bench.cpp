#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pcenter/bounds.hpp"
#include "pcenter/cuts.hpp"
#include "pcenter/engine.hpp"
#include "pcenter/heuristic.hpp"
#include "pcenter/lp.hpp"
#include "pcenter/oracle.hpp"

using namespace pcenter;

namespace {

Instance coords_instance(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0, 10000);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
  return Instance::from_coords(std::move(pts));
}

std::vector<double> fractional_point(int n, int p, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> y(n);
  double total = 0;
  for (double& v : y) total += v = u(rng);
  for (double& v : y) v *= p / total;
  return y;
}

void BM_separation_scan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = coords_instance(n, 1);
  const auto y = fractional_point(n, 5, 2);
  for (auto _ : state) {
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      const auto sep = max_violation(inst, i, 100.0, y, 50.0);
      worst = std::max(worst, sep.violation);
    }
    benchmark::DoNotOptimize(worst);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_separation_scan)->Arg(500)->Arg(2000)->Arg(8000);

void BM_lp_resolve_with_cuts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = random_instance(n, 3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pc2_lp_value(inst, 3));
  }
}
BENCHMARK(BM_lp_resolve_with_cuts)->Arg(20)->Arg(40)->Arg(80);

void BM_greedy_heuristic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = coords_instance(n, 3);
  const auto y = fractional_point(n, 5, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_from_lp(inst, y, 5));
  }
}
BENCHMARK(BM_greedy_heuristic)->Arg(500)->Arg(2000);

void BM_farthest_point_sample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = coords_instance(n, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(farthest_point_sample(inst, 6, 1));
  }
}
BENCHMARK(BM_farthest_point_sample)->Arg(2000)->Arg(20000);

void BM_end_to_end_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = random_instance(n, 3, 11);
  for (auto _ : state) {
    SolverConfig cfg;
    cfg.scheme = Scheme::FixedCustomer;
    benchmark::DoNotOptimize(solve(inst, 3, cfg));
  }
}
BENCHMARK(BM_end_to_end_solve)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
