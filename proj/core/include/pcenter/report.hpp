#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pcenter/bounds.hpp"
#include "pcenter/engine.hpp"

namespace pcenter {

/// One solver run flattened for machine-readable output.
struct RunRecord {
  std::string name;
  int n = 0;
  int p = 0;
  std::string scheme;  // JSON only; not part of the CSV schema
  double lb = 0;
  double ub = 0;
  double gap = 0;  // percent
  long nodes = 0;
  long cuts = 0;
  double time = 0;
  std::string status;  // "optimal" | "time_limit" | "infeasible"
  std::vector<int> sites;

  bool operator==(const RunRecord&) const = default;
};

RunRecord make_record(const std::string& name, const Instance& inst, int p,
                      const SolveResult& result,
                      const std::string& scheme = "maxviolated");

std::string status_name(SolveStatus status);

/// CSV with the fixed header "name,V,p,LB,UB,gap,nodes,cuts,time,status".
/// The open-site list is not part of the CSV schema.
void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& is);

/// JSON array of records, sites included.
void write_json(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_json(std::istream& is);

/// Bound-iteration trace as a JSON object.
void write_bound_report(std::ostream& os, const std::string& name,
                        const BoundReport& report);

}  // namespace pcenter
