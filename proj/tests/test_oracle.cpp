#include <doctest.h>

#include "fixtures.hpp"
#include "pcenter/heuristic.hpp"
#include "pcenter/oracle.hpp"

using namespace pcenter;

TEST_CASE("four-point line optimum") {
  Instance inst = fixtures::four_point_line();
  OracleResult res = brute_force(inst, 2);
  CHECK(res.optimum == 3);
  CHECK(res.sites == std::vector<int>{1, 3});
  CHECK(res.enumerated == 6);  // C(4,2)
}

TEST_CASE("degenerate p values") {
  Instance inst = fixtures::four_point_line();
  CHECK(brute_force(inst, 4).optimum == 0);  // everything open, I = J
  CHECK(brute_force(inst, 1).optimum == 5);  // best single site is 4
  CHECK_THROWS_AS(brute_force(inst, 0), SizeError);
  CHECK_THROWS_AS(brute_force(inst, 5), SizeError);
}

TEST_CASE("p=1 picks the best column") {
  // every customer sees distances (5,2,7): the single center is site 1
  Instance inst = Instance::from_matrix(
      {{5, 2, 7}, {5, 2, 7}, {5, 2, 7}}, 1, true);
  OracleResult res = brute_force(inst, 1);
  CHECK(res.optimum == 2);
  CHECK(res.sites == std::vector<int>{1});
}

TEST_CASE("subset cap is enforced") {
  Instance inst = random_instance(20, 5, 1);
  CHECK_THROWS_AS(brute_force(inst, 5, /*cap=*/100), SizeError);
  CHECK_NOTHROW(brute_force(inst, 5, /*cap=*/20'000));
}

TEST_CASE("optimum always lies in the candidate radii") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    const int n = 5 + seed % 8;
    const int p = 1 + seed % 4;
    Instance inst = random_instance(n, p, seed);
    OracleResult res = brute_force(inst, std::min(p, n - 1));
    CHECK(inst.candidate_radii().contains(res.optimum));
    CHECK(res.optimum ==
          eval_objective(inst, res.sites));
  }
}

TEST_CASE("random instances are reproducible by seed") {
  Instance a = random_instance(12, 3, 77);
  Instance b = random_instance(12, 3, 77);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) CHECK(a.distance(i, j) == b.distance(i, j));
}
