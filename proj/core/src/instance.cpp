#include "pcenter/instance.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace pcenter {

double RadiusSet::snap_up(double v, double tol) const {
  auto it = std::lower_bound(values.begin(), values.end(), v - tol);
  if (it == values.end())
    throw std::runtime_error("snap_up: value above largest distance");
  return *it;
}

bool RadiusSet::contains(double v, double tol) const {
  auto it = std::lower_bound(values.begin(), values.end(), v - tol);
  return it != values.end() && std::abs(*it - v) <= tol;
}

void Instance::set_p(int p) {
  if (p < 1 || p > n_) throw SizeError("p must satisfy 1 <= p <= n_sites");
  p_ = p;
}

Instance Instance::from_matrix(std::vector<std::vector<double>> dist, int p,
                               bool integral) {
  Instance inst;
  inst.n_ = static_cast<int>(dist.size());
  inst.mode_ = DistanceMode::Matrix;
  inst.integral_ = integral;
  for (const auto& row : dist) {
    if (static_cast<int>(row.size()) != inst.n_)
      throw ParseError("distance matrix is not square");
    for (double d : row)
      if (!(d >= 0) || !std::isfinite(d))
        throw ParseError("distances must be finite and nonnegative");
  }
  inst.matrix_ = std::move(dist);
  inst.set_p(p);
  return inst;
}

Instance Instance::from_coords(std::vector<std::pair<double, double>> pts,
                               int p) {
  Instance inst;
  inst.n_ = static_cast<int>(pts.size());
  inst.mode_ = DistanceMode::Euclid2dFloor;
  inst.integral_ = true;
  inst.coords_ = std::move(pts);
  if (p > 0) inst.set_p(p);
  return inst;
}

Instance Instance::load_pmed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ":1: empty file");
  std::istringstream header(line);
  int n = 0, edges = 0, p = 0;
  if (!(header >> n >> edges >> p) || n < 1 || edges < 0 || p < 1)
    throw ParseError(path + ":1: malformed header (expected: n edges p)");

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;

  for (int e = 0; e < edges; ++e) {
    if (!std::getline(in, line))
      throw ParseError(path + ": unexpected end of file, expected " +
                       std::to_string(edges) + " edges");
    std::istringstream es(line);
    int u = 0, v = 0;
    double w = 0;
    if (!(es >> u >> v >> w) || u < 1 || u > n || v < 1 || v > n || w <= 0)
      throw ParseError(path + ":" + std::to_string(e + 2) +
                       ": malformed edge line");
    d[u - 1][v - 1] = std::min(d[u - 1][v - 1], w);
    d[v - 1][u - 1] = d[u - 1][v - 1];
  }

  // Floyd-Warshall; n <= 900 for the literature set.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const double dik = d[i][k];
      if (dik == inf) continue;
      for (int j = 0; j < n; ++j)
        if (dik + d[k][j] < d[i][j]) d[i][j] = dik + d[k][j];
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] == inf)
        throw ParseError(path + ": graph is disconnected (no path " +
                         std::to_string(i + 1) + " -> " + std::to_string(j + 1) +
                         ")");

  return from_matrix(std::move(d), p, /*integral=*/true);
}

Instance Instance::load_tsplib(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);

  int dimension = -1;
  bool euc2d = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string key = line.substr(0, line.find(':'));
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    if (key == "DIMENSION") {
      dimension = std::stoi(line.substr(line.find(':') + 1));
    } else if (key == "EDGE_WEIGHT_TYPE") {
      std::string val = line.substr(line.find(':') + 1);
      val.erase(std::remove_if(val.begin(), val.end(), ::isspace), val.end());
      if (val != "EUC_2D")
        throw ParseError(path + ": unsupported EDGE_WEIGHT_TYPE " + val);
      euc2d = true;
    } else if (line.find("NODE_COORD_SECTION") != std::string::npos) {
      break;
    }
  }
  if (!euc2d) throw ParseError(path + ": EDGE_WEIGHT_TYPE EUC_2D not declared");
  if (dimension < 1) throw ParseError(path + ": missing DIMENSION");

  std::vector<std::pair<double, double>> pts;
  pts.reserve(dimension);
  while (std::getline(in, line)) {
    if (line.find("EOF") != std::string::npos) break;
    std::istringstream cs(line);
    long id;
    double x, y;
    if (!(cs >> id >> x >> y)) {
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      throw ParseError(path + ": malformed coordinate line: " + line);
    }
    pts.emplace_back(x, y);
  }
  if (static_cast<int>(pts.size()) != dimension)
    throw ParseError(path + ": coordinate count " + std::to_string(pts.size()) +
                     " does not match DIMENSION " + std::to_string(dimension));

  return from_coords(std::move(pts));
}

RadiusSet Instance::candidate_radii(std::optional<std::size_t> cap) const {
  const std::size_t pairs =
      static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  if (cap && pairs > *cap)
    throw SizeError(
        "candidate_radii: instance has " + std::to_string(pairs) +
        " pairs, exceeding the cap; use ceiling-based rounding instead of "
        "D-snapping");

  std::set<double> vals;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) vals.insert(distance(i, j));
  RadiusSet rs;
  rs.values.assign(vals.begin(), vals.end());
  return rs;
}

}  // namespace pcenter
