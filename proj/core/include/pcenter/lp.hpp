#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

namespace pcenter::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { LE, GE, EQ };

struct Entry {
  int var;
  double coef;
};

struct Row {
  std::vector<Entry> entries;
  Sense sense = Sense::GE;
  double rhs = 0;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

enum class VarState : std::uint8_t { Basic, AtLower, AtUpper, FreeNonbasic };

/// Warm-start token: one state per column (structurals first, then one
/// slack per row). A token from an older model revision is extended with
/// slack-basic states for rows it has not seen.
struct Basis {
  std::vector<VarState> state;
  bool empty() const { return state.empty(); }
};

struct Solution {
  Status status = Status::Infeasible;
  double objective = 0;
  std::vector<double> primal;  // structural variables only
  Basis basis;
};

struct Options {
  double pivot_tol = 1e-9;
  double feas_tol = 1e-7;
  int iteration_cap = 0;  // 0: 50*(vars+rows)
};

/// Bounded-variable LP in minimization form. Rows are held sparsely and
/// can be appended incrementally; variable bounds can be tightened for
/// branching fixings.
class Model {
 public:
  int add_var(double obj, double lo, double hi);
  int add_row(Row r);
  std::vector<int> add_rows(std::vector<Row> rows);

  void set_var_bounds(int var, double lo, double hi);
  /// Replacing the rhs keeps row ids stable; a very slack rhs effectively
  /// deactivates a >= row (used by the engine's cut purging).
  void set_row_rhs(int row, double rhs);

  int num_vars() const { return static_cast<int>(obj_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const Row& row(int r) const { return rows_[r]; }
  double obj(int v) const { return obj_[v]; }
  double lo(int v) const { return lo_[v]; }
  double hi(int v) const { return hi_[v]; }

  /// Debug dump in LP-text layout (not a bit-exact interchange format).
  void dump(std::ostream& os) const;

 private:
  std::vector<double> obj_, lo_, hi_;
  std::vector<Row> rows_;
};

/// Primal simplex with dense basis inverse. A warm basis is accepted even
/// if primal infeasible for the current rows; a composite phase 1 restores
/// feasibility. Deterministic for identical inputs.
Solution solve(const Model& m, const Basis* warm = nullptr,
               const Options& opt = {});

}  // namespace pcenter::lp
