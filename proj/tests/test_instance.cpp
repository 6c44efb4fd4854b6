#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pcenter/instance.hpp"
#include "pcenter/oracle.hpp"

using namespace pcenter;

TEST_CASE("pmed triangle graph takes the shortest path") {
  fixtures::TempFile f("3 3 1\n1 2 2\n2 3 3\n1 3 10\n");
  Instance inst = Instance::load_pmed(f.path);
  CHECK(inst.n_customers() == 3);
  CHECK(inst.p() == 1);
  CHECK(inst.distance(0, 2) == 5);  // via vertex 2, not the direct edge
  CHECK(inst.distance(2, 0) == 5);
  CHECK(inst.distance(0, 1) == 2);
  CHECK(inst.integral_distances());

  const RadiusSet radii = inst.candidate_radii();
  CHECK(radii.values == std::vector<double>{0, 2, 3, 5});
}

TEST_CASE("pmed single vertex without edges") {
  fixtures::TempFile f("1 0 1\n");
  Instance inst = Instance::load_pmed(f.path);
  CHECK(inst.n_customers() == 1);
  CHECK(inst.distance(0, 0) == 0);
}

TEST_CASE("pmed parse errors carry the offending line") {
  fixtures::TempFile bad_header("3 oops 1\n");
  CHECK_THROWS_AS(Instance::load_pmed(bad_header.path), ParseError);

  fixtures::TempFile bad_edge("2 1 1\n1 5 2\n");
  CHECK_THROWS_AS(Instance::load_pmed(bad_edge.path), ParseError);

  fixtures::TempFile disconnected("3 1 1\n1 2 4\n");
  CHECK_THROWS_WITH_AS(Instance::load_pmed(disconnected.path),
                       doctest::Contains("disconnected"), ParseError);
}

TEST_CASE("tsplib floors the Euclidean distance") {
  fixtures::TempFile f(
      "NAME : tiny\nTYPE : TSP\nDIMENSION : 2\nEDGE_WEIGHT_TYPE : EUC_2D\n"
      "NODE_COORD_SECTION\n1 0 0\n2 3 4\nEOF\n");
  Instance inst = Instance::load_tsplib(f.path);
  CHECK(inst.n_customers() == 2);
  CHECK(inst.mode() == DistanceMode::Euclid2dFloor);
  CHECK(inst.distance(0, 1) == 5);
  CHECK(inst.p() == 0);  // not part of the format
  CHECK_THROWS_AS(inst.set_p(0), SizeError);
}

TEST_CASE("tsplib rejects other weight types and count mismatches") {
  fixtures::TempFile ceil(
      "DIMENSION : 1\nEDGE_WEIGHT_TYPE : CEIL_2D\nNODE_COORD_SECTION\n"
      "1 0 0\nEOF\n");
  CHECK_THROWS_AS(Instance::load_tsplib(ceil.path), ParseError);

  fixtures::TempFile short_list(
      "DIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\nNODE_COORD_SECTION\n"
      "1 0 0\n2 1 1\nEOF\n");
  CHECK_THROWS_AS(Instance::load_tsplib(short_list.path), ParseError);
}

TEST_CASE("floored Euclidean distances") {
  Instance inst = Instance::from_coords({{0, 0}, {1, 1}, {2, 2}}, 1);
  CHECK(inst.distance(0, 1) == 1);  // floor(sqrt(2))
  CHECK(inst.distance(0, 2) == 2);  // floor(2.828...)
  CHECK(inst.distance(1, 1) == 0);
  // floor never overshoots the true distance
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double exact = std::hypot(i - j, i - j);
      CHECK(inst.distance(i, j) <= exact);
      CHECK(exact < inst.distance(i, j) + 1);
    }
}

TEST_CASE("candidate radii on the four-point line") {
  Instance inst = fixtures::four_point_line();
  const RadiusSet radii = inst.candidate_radii();
  CHECK(radii.values == std::vector<double>{0, 1, 3, 4, 5, 8, 9});
  CHECK(radii.size() == 7);
  CHECK(radii.contains(3));
  CHECK(!radii.contains(2));
  CHECK(radii.snap_up(2.5) == 3);
  CHECK(radii.snap_up(3.0) == 3);
  CHECK(radii.snap_up(3.0 + 1e-7) == 3);  // LP-noise slack
  CHECK_THROWS(radii.snap_up(10));
}

TEST_CASE("candidate radii honor the pair cap") {
  Instance inst = fixtures::four_point_line();
  CHECK_THROWS_AS(inst.candidate_radii(std::size_t{8}), SizeError);
  CHECK_NOTHROW(inst.candidate_radii(std::size_t{16}));
}

TEST_CASE("trivial 2x2 matrix radii") {
  Instance inst = Instance::from_matrix({{0, 2}, {2, 0}}, 1);
  CHECK(inst.candidate_radii().values == std::vector<double>{0, 2});
}

TEST_CASE("random graph instances are symmetric metrics") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    Instance inst = random_instance(12, 2, seed);
    const int n = inst.n_customers();
    for (int i = 0; i < n; ++i) {
      CHECK(inst.distance(i, i) == 0);
      for (int j = 0; j < n; ++j) {
        CHECK(inst.distance(i, j) == inst.distance(j, i));
        for (int k = 0; k < n; ++k)
          CHECK(inst.distance(i, j) <=
                inst.distance(i, k) + inst.distance(k, j));
      }
    }
  }
}

TEST_CASE("matrix loader validates shape and values") {
  CHECK_THROWS_AS(Instance::from_matrix({{0, 1}, {1}}, 1), ParseError);
  CHECK_THROWS_AS(Instance::from_matrix({{0, -1}, {-1, 0}}, 1), ParseError);
  CHECK_THROWS_AS(Instance::from_matrix({{0, 1}, {1, 0}}, 3), SizeError);
}
