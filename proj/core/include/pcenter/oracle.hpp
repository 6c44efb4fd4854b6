#pragma once

#include <cstdint>
#include <vector>

#include "pcenter/instance.hpp"

namespace pcenter {

struct OracleResult {
  double optimum = 0;
  std::vector<int> sites;     // first optimal set in lexicographic order
  std::uint64_t enumerated = 0;
};

/// Exhaustive enumeration of all C(m, p) site subsets. Refuses to scan
/// more than cap subsets.
OracleResult brute_force(const Instance& inst, int p,
                         std::uint64_t cap = 10'000'000);

/// Seeded random metric instance: a random connected weighted graph taken
/// to its shortest-path closure, so distances are symmetric integers that
/// honor the triangle inequality.
Instance random_instance(int n, int p, unsigned seed, int max_weight = 20);

}  // namespace pcenter
