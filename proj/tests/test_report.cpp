#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "pcenter/engine.hpp"
#include "pcenter/report.hpp"

using namespace pcenter;

namespace {

std::vector<RunRecord> sample_records() {
  Instance inst = fixtures::four_point_line();
  SolveResult res = solve(inst, 2, SolverConfig{});
  RunRecord a = make_record("four_point_line", inst, 2, res, "maxviolated");
  RunRecord b = a;
  b.name = "copy";
  b.scheme = "fixedcustomer";
  b.time = 1.25;
  return {a, b};
}

}  // namespace

TEST_CASE("csv uses the fixed header and round-trips") {
  auto records = sample_records();
  std::ostringstream os;
  write_csv(os, records);
  const std::string text = os.str();
  CHECK(text.rfind("name,V,p,LB,UB,gap,nodes,cuts,time,status\n", 0) == 0);

  std::istringstream is(text);
  auto parsed = read_csv(is);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t k = 0; k < parsed.size(); ++k) {
    // the site list and scheme are JSON-only fields
    RunRecord expected = records[k];
    expected.sites.clear();
    expected.scheme.clear();
    CHECK(parsed[k] == expected);
  }
}

TEST_CASE("csv rejects foreign headers") {
  std::istringstream is("instance,n,p\nx,1,1\n");
  CHECK_THROWS_AS(read_csv(is), ParseError);
}

TEST_CASE("json round-trips including sites") {
  auto records = sample_records();
  std::ostringstream os;
  write_json(os, records);
  std::istringstream is(os.str());
  auto parsed = read_json(is);
  REQUIRE(parsed.size() == records.size());
  CHECK(parsed == records);
}

TEST_CASE("json parse errors become parse errors") {
  std::istringstream not_json("][");
  CHECK_THROWS_AS(read_json(not_json), ParseError);
  std::istringstream not_array("{}");
  CHECK_THROWS_AS(read_json(not_array), ParseError);
}

TEST_CASE("status names cover every state") {
  CHECK(status_name(SolveStatus::Optimal) == "optimal");
  CHECK(status_name(SolveStatus::TimeLimit) == "time_limit");
  CHECK(status_name(SolveStatus::Infeasible) == "infeasible");
}

TEST_CASE("bound report serialization carries the trace") {
  BoundReport report;
  report.lb_sharp = 3;
  report.lb_star = 3;
  report.iterations = 2;
  report.scp_value_at_lb_sharp = 2;
  report.per_iteration = {{0, 1.5, 3}, {3, 3, 3}};
  std::ostringstream os;
  write_bound_report(os, "line", report);
  const std::string text = os.str();
  CHECK(text.find("\"lb_sharp\": 3") != std::string::npos);
  CHECK(text.find("\"trace\"") != std::string::npos);
  CHECK(text.find("1.5") != std::string::npos);
}
