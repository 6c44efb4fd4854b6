#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "pcenter/cuts.hpp"
#include "pcenter/lp.hpp"

using namespace pcenter;

TEST_CASE("single bounded z row") {
  lp::Model m;
  const int z = m.add_var(1.0, -lp::kInf, lp::kInf);
  m.add_row({{{z, 1.0}}, lp::Sense::GE, 3.0});
  auto sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.objective == doctest::Approx(3.0));

  SUBCASE("tightening the bound moves the optimum") {
    m.add_row({{{z, 1.0}}, lp::Sense::GE, 5.0});
    auto sol2 = lp::solve(m, &sol.basis);
    REQUIRE(sol2.status == lp::Status::Optimal);
    CHECK(sol2.objective == doctest::Approx(5.0));
  }
  SUBCASE("an implied row changes nothing") {
    m.add_row({{{z, 1.0}}, lp::Sense::GE, 1.0});
    auto sol2 = lp::solve(m, &sol.basis);
    REQUIRE(sol2.status == lp::Status::Optimal);
    CHECK(sol2.objective == doctest::Approx(3.0));
  }
}

TEST_CASE("bound-active optimum") {
  lp::Model m;
  m.add_var(-1.0, 0.0, 1.0);
  auto sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.objective == doctest::Approx(-1.0));
  CHECK(sol.primal[0] == doctest::Approx(1.0));
}

TEST_CASE("unbounded and infeasible detection") {
  lp::Model m;
  const int z = m.add_var(1.0, -lp::kInf, lp::kInf);
  SUBCASE("free variable, no rows") {
    CHECK(lp::solve(m).status == lp::Status::Unbounded);
  }
  SUBCASE("contradictory rows") {
    m.add_row({{{z, 1.0}}, lp::Sense::GE, 3.0});
    m.add_row({{{z, 1.0}}, lp::Sense::LE, 2.0});
    CHECK(lp::solve(m).status == lp::Status::Infeasible);
  }
}

TEST_CASE("degenerate relaxation of the compact model") {
  // Only the cardinality row: z is unbounded below until z >= 0 arrives.
  lp::Model m;
  for (int j = 0; j < 4; ++j) m.add_var(0.0, 0.0, 1.0);
  const int z = m.add_var(1.0, -lp::kInf, lp::kInf);
  lp::Row card;
  card.sense = lp::Sense::EQ;
  card.rhs = 2;
  for (int j = 0; j < 4; ++j) card.entries.push_back({j, 1.0});
  m.add_row(std::move(card));
  CHECK(lp::solve(m).status == lp::Status::Unbounded);

  m.add_row({{{z, 1.0}}, lp::Sense::GE, 0.0});
  auto sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.objective == doctest::Approx(0.0));
}

TEST_CASE("cut sequence converges to the four-point-line optimum") {
  Instance inst = fixtures::four_point_line();
  lp::Model m;
  for (int j = 0; j < 4; ++j) m.add_var(0.0, 0.0, 1.0);
  const int z = m.add_var(1.0, -lp::kInf, lp::kInf);
  lp::Row card;
  card.sense = lp::Sense::EQ;
  card.rhs = 2;
  for (int j = 0; j < 4; ++j) card.entries.push_back({j, 1.0});
  m.add_row(std::move(card));
  m.add_row({{{z, 1.0}}, lp::Sense::GE, 0.0});

  lp::Basis basis;
  double prev = -1;
  for (int round = 0; round < 64; ++round) {
    auto sol = lp::solve(m, basis.empty() ? nullptr : &basis);
    REQUIRE(sol.status == lp::Status::Optimal);
    CHECK(sol.objective >= prev - 1e-9);  // monotone bound growth
    prev = sol.objective;
    basis = sol.basis;
    const std::span<const double> y(sol.primal.data(), 4);
    int added = 0;
    for (int i = 0; i < 4; ++i) {
      auto sep = max_violation(inst, i, 0.0, y, sol.primal[z]);
      if (sep.violation > 1e-6 && sep.anchor_site >= 0) {
        m.add_row(build_cut(inst, i, sep.anchor_site, 0.0).to_row(z));
        ++added;
      }
    }
    if (added == 0) break;
  }
  // LP bound of the compact formulation; brute-force optimum is 3.
  CHECK(prev <= 3.0 + 1e-9);
  CHECK(prev > 0.0);
}

TEST_CASE("warm start does not change the optimum") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 4.0);
  for (int trial = 0; trial < 25; ++trial) {
    lp::Model m;
    const int nv = 6;
    for (int v = 0; v < nv; ++v) m.add_var(u(rng) - 2.0, 0.0, 1.0 + u(rng));
    for (int r = 0; r < 8; ++r) {
      lp::Row row;
      row.sense = r % 3 == 0 ? lp::Sense::LE
                  : r % 3 == 1 ? lp::Sense::GE
                               : lp::Sense::EQ;
      row.rhs = u(rng);
      for (int v = 0; v < nv; ++v)
        if ((v + r) % 2 == 0) row.entries.push_back({v, u(rng) - 1.0});
      if (row.sense == lp::Sense::EQ) row.sense = lp::Sense::LE;
      m.add_row(std::move(row));
    }
    auto cold = lp::solve(m);
    if (cold.status != lp::Status::Optimal) continue;
    auto warm = lp::solve(m, &cold.basis);
    REQUIRE(warm.status == lp::Status::Optimal);
    CHECK(warm.objective == doctest::Approx(cold.objective).epsilon(1e-7));
    // determinism: cold re-solve reproduces itself exactly
    auto again = lp::solve(m);
    CHECK(again.objective == cold.objective);
  }
}

TEST_CASE("optimal solutions respect rows and bounds") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    lp::Model m;
    const int nv = 5;
    for (int v = 0; v < nv; ++v) m.add_var(u(rng), 0.0, 2.0);
    std::vector<lp::Row> rows;
    for (int r = 0; r < 6; ++r) {
      lp::Row row;
      row.sense = r % 2 ? lp::Sense::LE : lp::Sense::GE;
      row.rhs = u(rng);
      for (int v = 0; v < nv; ++v) row.entries.push_back({v, u(rng)});
      rows.push_back(row);
      m.add_row(std::move(row));
    }
    auto sol = lp::solve(m);
    if (sol.status != lp::Status::Optimal) continue;
    double obj = 0;
    for (int v = 0; v < nv; ++v) {
      CHECK(sol.primal[v] >= -1e-7);
      CHECK(sol.primal[v] <= 2.0 + 1e-7);
      obj += m.obj(v) * sol.primal[v];
    }
    CHECK(obj == doctest::Approx(sol.objective).epsilon(1e-7));
    for (const auto& row : rows) {
      double ax = 0;
      for (const auto& e : row.entries) ax += e.coef * sol.primal[e.var];
      if (row.sense == lp::Sense::LE) CHECK(ax <= row.rhs + 1e-7);
      if (row.sense == lp::Sense::GE) CHECK(ax >= row.rhs - 1e-7);
    }
  }
}

TEST_CASE("anti-cycling on a classic degenerate model") {
  // Beale's cycling example; Dantzig pricing alone loops on it.
  lp::Model m;
  const int x1 = m.add_var(-0.75, 0.0, lp::kInf);
  const int x2 = m.add_var(150.0, 0.0, lp::kInf);
  const int x3 = m.add_var(-0.02, 0.0, lp::kInf);
  const int x4 = m.add_var(6.0, 0.0, lp::kInf);
  m.add_row({{{x1, 0.25}, {x2, -60.0}, {x3, -0.04}, {x4, 9.0}},
             lp::Sense::LE, 0.0});
  m.add_row({{{x1, 0.5}, {x2, -90.0}, {x3, -0.02}, {x4, 3.0}},
             lp::Sense::LE, 0.0});
  m.add_row({{{x3, 1.0}}, lp::Sense::LE, 1.0});
  auto sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.objective == doctest::Approx(-0.05));
}

TEST_CASE("variable bound updates drive branching fixings") {
  lp::Model m;
  m.add_var(1.0, 0.0, 1.0);
  m.add_var(1.0, 0.0, 1.0);
  m.add_row({{{0, 1.0}, {1, 1.0}}, lp::Sense::GE, 1.0});
  auto sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.objective == doctest::Approx(1.0));

  m.set_var_bounds(0, 1.0, 1.0);  // fix y_0 = 1
  m.set_var_bounds(1, 0.0, 0.0);  // fix y_1 = 0
  sol = lp::solve(m);
  REQUIRE(sol.status == lp::Status::Optimal);
  CHECK(sol.primal[0] == doctest::Approx(1.0));
  CHECK(sol.primal[1] == doctest::Approx(0.0));
}

TEST_CASE("duplicate column indices in a row are rejected") {
  lp::Model m;
  m.add_var(1.0, 0.0, 1.0);
  CHECK_THROWS(m.add_row({{{0, 1.0}, {0, 2.0}}, lp::Sense::GE, 1.0}));
}

TEST_CASE("model dump is textual and mentions every row") {
  lp::Model m;
  m.add_var(1.0, 0.0, 1.0);
  m.add_row({{{0, 1.0}}, lp::Sense::GE, 0.5});
  std::ostringstream os;
  m.dump(os);
  CHECK(os.str().find("0.5") != std::string::npos);
}
