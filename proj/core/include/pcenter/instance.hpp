#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcenter {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DistanceMode { Matrix, Euclid2dFloor };

/// Sorted set of distinct pairwise distances d_1 < ... < d_K.
struct RadiusSet {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }

  /// Smallest member >= v (snapping up, with a small slack for LP noise).
  double snap_up(double v, double tol = 1e-6) const;

  bool contains(double v, double tol = 1e-9) const;
};

/// A p-center instance. Immutable after load; all reads are thread-safe.
///
/// Customers and sites coincide (I = J) for every supported input format.
/// Distances are either a materialized symmetric matrix (pmed graphs via
/// all-pairs shortest paths) or computed on demand as floor(Euclidean)
/// from 2D coordinates (TSPLIB). Large coordinate instances never build
/// the matrix.
class Instance {
 public:
  static Instance from_matrix(std::vector<std::vector<double>> dist, int p,
                              bool integral = true);
  static Instance from_coords(std::vector<std::pair<double, double>> pts,
                              int p = 0);

  /// OR-Library p-median format: header "n edges p", then weighted edges
  /// (1-based, positive integer weights). Distances are all-pairs shortest
  /// paths; a disconnected graph is an error.
  static Instance load_pmed(const std::string& path);

  /// TSPLIB subset: EDGE_WEIGHT_TYPE EUC_2D with a NODE_COORD_SECTION.
  /// p is not part of the file; set it via set_p before solving.
  static Instance load_tsplib(const std::string& path);

  int n_customers() const { return n_; }
  int n_sites() const { return n_; }
  int p() const { return p_; }
  void set_p(int p);

  DistanceMode mode() const { return mode_; }
  bool integral_distances() const { return integral_; }

  double distance(int i, int j) const {
    if (mode_ == DistanceMode::Matrix) return matrix_[i][j];
    const double dx = coords_[i].first - coords_[j].first;
    const double dy = coords_[i].second - coords_[j].second;
    return std::floor(std::sqrt(dx * dx + dy * dy));
  }

  /// All distinct d_ij, sorted ascending. With a cap, refuses to enumerate
  /// more than cap pairs instead of exhausting memory.
  RadiusSet candidate_radii(std::optional<std::size_t> cap = {}) const;

 private:
  Instance() = default;

  int n_ = 0;
  int p_ = 0;
  DistanceMode mode_ = DistanceMode::Matrix;
  bool integral_ = true;
  std::vector<std::vector<double>> matrix_;
  std::vector<std::pair<double, double>> coords_;
};

}  // namespace pcenter
