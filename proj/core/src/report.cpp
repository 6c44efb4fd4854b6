#include "pcenter/report.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pcenter {

namespace {
constexpr const char* kCsvHeader = "name,V,p,LB,UB,gap,nodes,cuts,time,status";

std::string fmt(double v) {
  // Round-trippable without trailing-zero noise on integral values.
  std::ostringstream os;
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
    os << static_cast<long long>(v);
  } else {
    os.precision(17);
    os << v;
  }
  return os.str();
}
}  // namespace

std::string status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::TimeLimit:
      return "time_limit";
    case SolveStatus::Infeasible:
      return "infeasible";
  }
  return "infeasible";
}

RunRecord make_record(const std::string& name, const Instance& inst, int p,
                      const SolveResult& result, const std::string& scheme) {
  RunRecord rec;
  rec.name = name;
  rec.n = inst.n_customers();
  rec.p = p;
  rec.scheme = scheme;
  rec.lb = result.lower_bound;
  rec.ub = result.best_solution.sites.empty()
               ? std::numeric_limits<double>::infinity()
               : result.best_solution.objective;
  rec.gap = result.gap_percent;
  rec.nodes = result.nodes;
  rec.cuts = result.cuts_added;
  rec.time = result.wall_time;
  rec.status = status_name(result.status);
  rec.sites = result.best_solution.sites;
  return rec;
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << kCsvHeader << "\n";
  for (const auto& r : records) {
    os << r.name << ',' << r.n << ',' << r.p << ',' << fmt(r.lb) << ','
       << fmt(r.ub) << ',' << fmt(r.gap) << ',' << r.nodes << ',' << r.cuts
       << ',' << fmt(r.time) << ',' << r.status << "\n";
  }
}

std::vector<RunRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw ParseError("read_csv: bad or missing header");

  std::vector<RunRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10)
      throw ParseError("read_csv: expected 10 fields, got line: " + line);
    RunRecord r;
    r.name = fields[0];
    r.n = std::stoi(fields[1]);
    r.p = std::stoi(fields[2]);
    r.lb = std::stod(fields[3]);
    r.ub = std::stod(fields[4]);
    r.gap = std::stod(fields[5]);
    r.nodes = std::stol(fields[6]);
    r.cuts = std::stol(fields[7]);
    r.time = std::stod(fields[8]);
    r.status = fields[9];
    out.push_back(std::move(r));
  }
  return out;
}

void write_json(std::ostream& os, const std::vector<RunRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j{{"name", r.name}, {"V", r.n},         {"p", r.p},
                     {"scheme", r.scheme},
                     {"LB", r.lb},     {"UB", r.ub},       {"gap", r.gap},
                     {"nodes", r.nodes}, {"cuts", r.cuts}, {"time", r.time},
                     {"status", r.status}, {"sites", r.sites}};
    arr.push_back(std::move(j));
  }
  os << arr.dump(2) << "\n";
}

std::vector<RunRecord> read_json(std::istream& is) {
  nlohmann::json arr;
  try {
    is >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("read_json: ") + e.what());
  }
  if (!arr.is_array()) throw ParseError("read_json: top level must be an array");

  std::vector<RunRecord> out;
  for (const auto& j : arr) {
    RunRecord r;
    r.name = j.at("name").get<std::string>();
    r.n = j.at("V").get<int>();
    r.p = j.at("p").get<int>();
    r.scheme = j.value("scheme", std::string{});
    r.lb = j.at("LB").get<double>();
    r.ub = j.at("UB").get<double>();
    r.gap = j.at("gap").get<double>();
    r.nodes = j.at("nodes").get<long>();
    r.cuts = j.at("cuts").get<long>();
    r.time = j.at("time").get<double>();
    r.status = j.at("status").get<std::string>();
    r.sites = j.value("sites", std::vector<int>{});
    out.push_back(std::move(r));
  }
  return out;
}

void write_bound_report(std::ostream& os, const std::string& name,
                        const BoundReport& report) {
  nlohmann::json iters = nlohmann::json::array();
  for (const auto& it : report.per_iteration)
    iters.push_back({{"lb_in", it.lb_in},
                     {"value", it.l_of_lb},
                     {"snapped", it.snapped_lb}});
  nlohmann::json j{{"name", name},
                   {"lb_sharp", report.lb_sharp},
                   {"lb_star", report.lb_star},
                   {"iterations", report.iterations},
                   {"scp_value_at_lb_sharp", report.scp_value_at_lb_sharp},
                   {"trace", std::move(iters)}};
  os << j.dump(2) << "\n";
}

}  // namespace pcenter
