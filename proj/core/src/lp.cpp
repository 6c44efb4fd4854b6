#include "pcenter/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pcenter::lp {

int Model::add_var(double obj, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("add_var: lo > hi");
  obj_.push_back(obj);
  lo_.push_back(lo);
  hi_.push_back(hi);
  return num_vars() - 1;
}

int Model::add_row(Row r) {
  for (std::size_t a = 0; a < r.entries.size(); ++a) {
    if (r.entries[a].var < 0 || r.entries[a].var >= num_vars())
      throw std::invalid_argument("add_row: entry references unknown variable");
    for (std::size_t b = a + 1; b < r.entries.size(); ++b)
      if (r.entries[a].var == r.entries[b].var)
        throw std::invalid_argument("add_row: duplicate variable in row");
  }
  rows_.push_back(std::move(r));
  return num_rows() - 1;
}

std::vector<int> Model::add_rows(std::vector<Row> rows) {
  std::vector<int> ids;
  ids.reserve(rows.size());
  for (auto& r : rows) ids.push_back(add_row(std::move(r)));
  return ids;
}

void Model::set_var_bounds(int var, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("set_var_bounds: lo > hi");
  lo_[var] = lo;
  hi_[var] = hi;
}

void Model::set_row_rhs(int row, double rhs) { rows_[row].rhs = rhs; }

void Model::dump(std::ostream& os) const {
  os << "Minimize\n obj:";
  for (int v = 0; v < num_vars(); ++v)
    if (obj_[v] != 0) os << " + " << obj_[v] << " x" << v;
  os << "\nSubject To\n";
  for (int r = 0; r < num_rows(); ++r) {
    os << " r" << r << ":";
    for (const auto& e : rows_[r].entries) os << " + " << e.coef << " x" << e.var;
    os << (rows_[r].sense == Sense::LE   ? " <= "
           : rows_[r].sense == Sense::GE ? " >= "
                                         : " = ")
       << rows_[r].rhs << "\n";
  }
  os << "Bounds\n";
  for (int v = 0; v < num_vars(); ++v)
    os << " " << lo_[v] << " <= x" << v << " <= " << hi_[v] << "\n";
  os << "End\n";
}

namespace {

// Columns are structurals followed by one slack per row; a row reads
// a.x + s = rhs with the slack bounded by the row sense.
class Simplex {
 public:
  Simplex(const Model& m, const Options& opt) : m_(m), opt_(opt) {
    nv_ = m.num_vars();
    nr_ = m.num_rows();
    nc_ = nv_ + nr_;
    cols_.resize(nc_);
    for (int r = 0; r < nr_; ++r)
      for (const auto& e : m.row(r).entries)
        cols_[e.var].push_back({r, e.coef});
    for (int r = 0; r < nr_; ++r) cols_[nv_ + r].push_back({r, 1.0});
    cap_ = opt.iteration_cap > 0 ? opt.iteration_cap : 50 * (nv_ + nr_);
  }

  Solution run(const Basis* warm) {
    init_basis(warm);
    if (!refactor()) reset_to_slack_basis();

    Solution sol;
    const Status ph1 = phase(/*phase1=*/true);
    if (ph1 != Status::Optimal) {
      sol.status = ph1;
      fill_solution(sol);
      return sol;
    }
    if (max_infeasibility() > opt_.feas_tol) {
      sol.status = Status::Infeasible;
      fill_solution(sol);
      return sol;
    }
    sol.status = phase(/*phase1=*/false);
    // Tighten the reported point before handing it back.
    refactor();
    fill_solution(sol);
    return sol;
  }

 private:
  double col_lo(int c) const {
    if (c < nv_) return m_.lo(c);
    switch (m_.row(c - nv_).sense) {
      case Sense::LE: return 0;
      case Sense::GE: return -kInf;
      default: return 0;
    }
  }
  double col_hi(int c) const {
    if (c < nv_) return m_.hi(c);
    switch (m_.row(c - nv_).sense) {
      case Sense::LE: return kInf;
      case Sense::GE: return 0;
      default: return 0;
    }
  }
  double col_obj(int c) const { return c < nv_ ? m_.obj(c) : 0.0; }

  double nonbasic_value(int c) const {
    switch (state_[c]) {
      case VarState::AtLower: return col_lo(c);
      case VarState::AtUpper: return col_hi(c);
      default: return 0.0;
    }
  }

  static VarState default_state(double lo, double hi) {
    if (std::isfinite(lo)) return VarState::AtLower;
    if (std::isfinite(hi)) return VarState::AtUpper;
    return VarState::FreeNonbasic;
  }

  void reset_to_slack_basis() {
    state_.assign(nc_, VarState::Basic);
    for (int c = 0; c < nv_; ++c) state_[c] = default_state(col_lo(c), col_hi(c));
    for (int r = 0; r < nr_; ++r) state_[nv_ + r] = VarState::Basic;
    basic_.resize(nr_);
    for (int r = 0; r < nr_; ++r) basic_[r] = nv_ + r;
    const bool ok = refactor();
    assert(ok);
    (void)ok;
  }

  void init_basis(const Basis* warm) {
    if (!warm || warm->empty()) {
      reset_to_slack_basis();
      return;
    }
    state_ = warm->state;
    // A token from before rows were appended: new slacks enter basic.
    while (static_cast<int>(state_.size()) < nc_)
      state_.push_back(VarState::Basic);
    if (static_cast<int>(state_.size()) != nc_) {
      reset_to_slack_basis();
      return;
    }
    basic_.clear();
    for (int c = 0; c < nc_; ++c)
      if (state_[c] == VarState::Basic) basic_.push_back(c);
    if (static_cast<int>(basic_.size()) != nr_) {
      reset_to_slack_basis();
      return;
    }
    // Nonbasic states may reference bounds that are no longer finite.
    for (int c = 0; c < nc_; ++c) {
      if (state_[c] == VarState::Basic) continue;
      if (state_[c] == VarState::AtLower && !std::isfinite(col_lo(c)))
        state_[c] = default_state(col_lo(c), col_hi(c));
      if (state_[c] == VarState::AtUpper && !std::isfinite(col_hi(c)))
        state_[c] = default_state(col_lo(c), col_hi(c));
    }
  }

  // Rebuild the dense basis inverse and the basic values from scratch.
  bool refactor() {
    binv_.assign(static_cast<std::size_t>(nr_) * nr_, 0.0);
    std::vector<double> B(static_cast<std::size_t>(nr_) * nr_, 0.0);
    for (int k = 0; k < nr_; ++k)
      for (const auto& e : cols_[basic_[k]]) B[e.var * nr_ + k] = e.coef;
    for (int k = 0; k < nr_; ++k) binv_[k * nr_ + k] = 1.0;

    // Gauss-Jordan with partial pivoting, applied to [B | I].
    for (int k = 0; k < nr_; ++k) {
      int piv = -1;
      double best = 1e-11;
      for (int r = k; r < nr_; ++r)
        if (std::abs(B[r * nr_ + k]) > best) {
          best = std::abs(B[r * nr_ + k]);
          piv = r;
        }
      if (piv < 0) return false;
      if (piv != k) {
        for (int c = 0; c < nr_; ++c) {
          std::swap(B[piv * nr_ + c], B[k * nr_ + c]);
          std::swap(binv_[piv * nr_ + c], binv_[k * nr_ + c]);
        }
      }
      const double inv = 1.0 / B[k * nr_ + k];
      for (int c = 0; c < nr_; ++c) {
        B[k * nr_ + c] *= inv;
        binv_[k * nr_ + c] *= inv;
      }
      for (int r = 0; r < nr_; ++r) {
        if (r == k) continue;
        const double f = B[r * nr_ + k];
        if (f == 0) continue;
        for (int c = 0; c < nr_; ++c) {
          B[r * nr_ + c] -= f * B[k * nr_ + c];
          binv_[r * nr_ + c] -= f * binv_[k * nr_ + c];
        }
      }
    }
    recompute_basic_values();
    pivots_since_refactor_ = 0;
    return true;
  }

  void recompute_basic_values() {
    std::vector<double> beff(nr_);
    for (int r = 0; r < nr_; ++r) beff[r] = m_.row(r).rhs;
    for (int c = 0; c < nc_; ++c) {
      if (state_[c] == VarState::Basic) continue;
      const double x = nonbasic_value(c);
      if (x == 0) continue;
      for (const auto& e : cols_[c]) beff[e.var] -= e.coef * x;
    }
    xb_.assign(nr_, 0.0);
    for (int k = 0; k < nr_; ++k) {
      double s = 0;
      for (int r = 0; r < nr_; ++r) s += binv_[k * nr_ + r] * beff[r];
      xb_[k] = s;
    }
  }

  double max_infeasibility() const {
    double worst = 0;
    for (int k = 0; k < nr_; ++k) {
      const int c = basic_[k];
      worst = std::max(worst, xb_[k] - col_hi(c));
      worst = std::max(worst, col_lo(c) - xb_[k]);
    }
    return worst;
  }

  // Infeasibility costs for the composite phase 1.
  void phase1_costs(std::vector<double>& cb) const {
    cb.assign(nr_, 0.0);
    for (int k = 0; k < nr_; ++k) {
      const int c = basic_[k];
      if (xb_[k] > col_hi(c) + opt_.feas_tol) cb[k] = 1.0;
      else if (xb_[k] < col_lo(c) - opt_.feas_tol) cb[k] = -1.0;
    }
  }

  Status phase(bool phase1) {
    std::vector<double> cb(nr_), y(nr_), w(nr_);
    int degenerate_streak = 0;

    for (; iterations_ < cap_; ++iterations_) {
      if (pivots_since_refactor_ >= 128) {
        if (!refactor()) return Status::IterationLimit;
      }

      if (phase1) {
        phase1_costs(cb);
        bool any = false;
        for (double v : cb) any |= (v != 0);
        if (!any) return Status::Optimal;
      } else {
        for (int k = 0; k < nr_; ++k) cb[k] = col_obj(basic_[k]);
      }

      // Duals y = cb^T * Binv.
      for (int r = 0; r < nr_; ++r) {
        double s = 0;
        for (int k = 0; k < nr_; ++k) s += cb[k] * binv_[k * nr_ + r];
        y[r] = s;
      }

      const bool bland = degenerate_streak > 60;
      int enter = -1, dir = 0;
      double best_score = opt_.pivot_tol;
      for (int c = 0; c < nc_; ++c) {
        if (state_[c] == VarState::Basic) continue;
        double d = col_obj(c) * (phase1 ? 0.0 : 1.0);
        for (const auto& e : cols_[c]) d -= y[e.var] * e.coef;
        int cdir = 0;
        if (state_[c] == VarState::AtLower && d < -opt_.pivot_tol) cdir = +1;
        else if (state_[c] == VarState::AtUpper && d > opt_.pivot_tol) cdir = -1;
        else if (state_[c] == VarState::FreeNonbasic &&
                 std::abs(d) > opt_.pivot_tol)
          cdir = d < 0 ? +1 : -1;
        if (cdir == 0) continue;
        if (bland) {
          enter = c;
          dir = cdir;
          break;
        }
        if (std::abs(d) > best_score) {
          best_score = std::abs(d);
          enter = c;
          dir = cdir;
        }
      }
      if (enter < 0)
        return Status::Optimal;

      // w = Binv * a_enter.
      std::fill(w.begin(), w.end(), 0.0);
      for (const auto& e : cols_[enter])
        for (int k = 0; k < nr_; ++k) w[k] += binv_[k * nr_ + e.var] * e.coef;

      // Ratio test. delta_k = change of basic k per unit step of entering.
      double limit = kInf;
      int leave_pos = -1;   // -1: bound flip of entering
      int leave_to = 0;     // -1: lower, +1: upper
      {
        const double lo_e = col_lo(enter), hi_e = col_hi(enter);
        if (std::isfinite(lo_e) && std::isfinite(hi_e)) limit = hi_e - lo_e;
      }
      for (int k = 0; k < nr_; ++k) {
        const double delta = -w[k] * dir;
        if (std::abs(delta) < opt_.pivot_tol) continue;
        const int c = basic_[k];
        const double lo = col_lo(c), hi = col_hi(c);
        double t = kInf;
        int to = 0;
        if (phase1 && xb_[k] > hi + opt_.feas_tol) {
          if (delta < 0) {
            t = (xb_[k] - hi) / (-delta);
            to = +1;
          }
        } else if (phase1 && xb_[k] < lo - opt_.feas_tol) {
          if (delta > 0) {
            t = (lo - xb_[k]) / delta;
            to = -1;
          }
        } else if (delta > 0) {
          if (std::isfinite(hi)) {
            t = (hi - xb_[k]) / delta;
            to = +1;
          }
        } else {
          if (std::isfinite(lo)) {
            t = (xb_[k] - lo) / (-delta);
            to = -1;
          }
        }
        if (t < -1e-12) t = 0;
        if (t < limit - 1e-12 ||
            (t < limit + 1e-12 && leave_pos >= 0 && basic_[k] < basic_[leave_pos])) {
          limit = t;
          leave_pos = k;
          leave_to = to;
        }
      }

      if (!std::isfinite(limit)) {
        if (phase1) return Status::IterationLimit;  // numerical trouble
        return Status::Unbounded;
      }
      const double step = std::max(limit, 0.0);
      degenerate_streak = step <= 1e-10 ? degenerate_streak + 1 : 0;

      for (int k = 0; k < nr_; ++k) xb_[k] += -w[k] * dir * step;

      if (leave_pos < 0) {
        // Entering runs to its opposite bound; basis unchanged.
        state_[enter] =
            dir > 0 ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      const int leave = basic_[leave_pos];
      const double enter_val = nonbasic_value(enter) + dir * step;
      state_[leave] = leave_to > 0 ? VarState::AtUpper : VarState::AtLower;
      if (!std::isfinite(leave_to > 0 ? col_hi(leave) : col_lo(leave)))
        state_[leave] = VarState::FreeNonbasic;
      state_[enter] = VarState::Basic;
      basic_[leave_pos] = enter;
      xb_[leave_pos] = enter_val;

      // Elementary update of the dense inverse.
      const double piv = w[leave_pos];
      if (std::abs(piv) < 1e-12) {
        if (!refactor()) return Status::IterationLimit;
        continue;
      }
      double* prow = &binv_[static_cast<std::size_t>(leave_pos) * nr_];
      for (int c = 0; c < nr_; ++c) prow[c] /= piv;
      for (int k = 0; k < nr_; ++k) {
        if (k == leave_pos) continue;
        const double f = w[k];
        if (f == 0) continue;
        double* krow = &binv_[static_cast<std::size_t>(k) * nr_];
        for (int c = 0; c < nr_; ++c) krow[c] -= f * prow[c];
      }
      ++pivots_since_refactor_;
    }
    return Status::IterationLimit;
  }

  void fill_solution(Solution& sol) {
    std::vector<double> x(nc_);
    for (int c = 0; c < nc_; ++c)
      x[c] = state_[c] == VarState::Basic ? 0.0 : nonbasic_value(c);
    for (int k = 0; k < nr_; ++k) x[basic_[k]] = xb_[k];
    sol.primal.assign(x.begin(), x.begin() + nv_);
    sol.objective = 0;
    for (int v = 0; v < nv_; ++v) sol.objective += m_.obj(v) * x[v];
    sol.basis.state = state_;
  }

  const Model& m_;
  const Options& opt_;
  int nv_ = 0, nr_ = 0, nc_ = 0;
  std::vector<std::vector<Entry>> cols_;  // Entry.var reused as row index
  std::vector<VarState> state_;
  std::vector<int> basic_;      // basic column per basis position
  std::vector<double> binv_;    // dense nr x nr inverse
  std::vector<double> xb_;      // basic values per position
  int iterations_ = 0;
  int pivots_since_refactor_ = 0;
  int cap_ = 0;
};

}  // namespace

Solution solve(const Model& m, const Basis* warm, const Options& opt) {
  if (m.num_rows() == 0) {
    // Pure bound problem; solved by inspection.
    Solution sol;
    sol.status = Status::Optimal;
    sol.primal.resize(m.num_vars());
    sol.objective = 0;
    for (int v = 0; v < m.num_vars(); ++v) {
      const double c = m.obj(v);
      double x;
      if (c > 0) x = m.lo(v);
      else if (c < 0) x = m.hi(v);
      else x = std::isfinite(m.lo(v)) ? m.lo(v) : (std::isfinite(m.hi(v)) ? m.hi(v) : 0.0);
      if (!std::isfinite(x)) {
        sol.status = Status::Unbounded;
        x = 0;
      }
      sol.primal[v] = x;
      sol.objective += c * x;
    }
    return sol;
  }
  Simplex s(m, opt);
  Solution sol = s.run(warm);
  if (sol.status == Status::IterationLimit && warm && !warm->empty()) {
    // Cold re-solve fallback for warm starts that went numerically bad.
    Simplex cold(m, opt);
    sol = cold.run(nullptr);
  }
  return sol;
}

}  // namespace pcenter::lp
