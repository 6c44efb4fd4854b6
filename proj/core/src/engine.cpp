#include "pcenter/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "pcenter/cuts.hpp"
#include "pcenter/lp.hpp"

namespace pcenter {

namespace {

constexpr double kInfD = std::numeric_limits<double>::infinity();

struct LocalCutNode {
  std::shared_ptr<const LocalCutNode> parent;
  std::vector<LiftedCut> cuts;
};

struct Node {
  long id = 0;
  long parent_id = -1;
  std::vector<signed char> fix;  // -1 free, 0/1 fixed
  std::shared_ptr<const LocalCutNode> local;
  double lb = 0;
  int depth = 0;
};

struct NodeOrder {
  // Best bound first, FIFO among ties.
  bool operator()(const Node& a, const Node& b) const {
    if (a.lb != b.lb) return a.lb > b.lb;
    return a.id > b.id;
  }
};

struct PoolCut {
  LiftedCut cut;
  bool active = true;
  int slack_streak = 0;
  int row_id = -1;  // valid for the model currently holding the row
};

class Engine {
 public:
  Engine(const Instance& inst, int p, const SolverConfig& cfg)
      : inst_(inst), p_(p), cfg_(cfg) {
    n_ = inst.n_customers();
    m_ = inst.n_sites();
    integral_ = inst.integral_distances();
  }

  SolveResult run() {
    start_ = std::chrono::steady_clock::now();

    if (cfg_.scheme == Scheme::FixedCustomer) {
      ihat_member_.assign(n_, 0);
      for (int i : farthest_point_sample(inst_, std::min(p_ + 1, n_), cfg_.seed)) {
        ihat_.push_back(i);
        ihat_member_[i] = 1;
      }
      double lb0 = kInfD;
      for (int i : ihat_)
        for (int j = 0; j < m_; ++j)
          if (j != i) lb0 = std::min(lb0, inst_.distance(i, j));
      lb_init_ = cfg_.use_lifting && std::isfinite(lb0) ? lb0 : 0.0;
    } else {
      lb_init_ = 0.0;
    }

    Node root;
    root.id = next_id_++;
    root.fix.assign(m_, -1);
    root.lb = lb_init_;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(std::move(root));

    double frontier_lb = lb_init_;
    while (!open.empty()) {
      Node node = open.top();
      open.pop();
      frontier_lb = std::max(frontier_lb, node.lb);

      if (timed_out()) {
        return finish(SolveStatus::TimeLimit, node.lb);
      }
      if (effective_bound(node.lb) >= ub_ - 1e-9) continue;

      ++nodes_;
      auto children = process_node(node);
      if (timed_out() && !children.empty()) {
        return finish(SolveStatus::TimeLimit, children.front().lb);
      }
      for (auto& c : children) open.push(std::move(c));
    }
    return finish(SolveStatus::Optimal, ub_);
  }

 private:
  bool timed_out() const {
    return elapsed() > cfg_.time_limit;
  }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  double effective_bound(double lb) const {
    return integral_ ? std::ceil(lb - 1e-6) : lb;
  }

  void maybe_update_incumbent(const std::vector<int>& sites) {
    const double obj = eval_objective(inst_, sites);
    if (obj < ub_ - 1e-9) {
      ub_ = obj;
      best_.sites = sites;
      best_.objective = obj;
    }
  }

  // One row per cut; the z column is always index m_.
  struct NodeLp {
    lp::Model model;
    int z = 0;
    int zrow = 0;
    std::vector<int> active_pool_rows;  // pool index -> row id (parallel)
    std::vector<int> active_pool_idx;
  };

  NodeLp build_model(const Node& node) {
    NodeLp nl;
    for (int j = 0; j < m_; ++j) {
      double lo = 0, hi = 1;
      if (node.fix[j] == 0) hi = 0;
      if (node.fix[j] == 1) lo = 1;
      nl.model.add_var(0.0, lo, hi);
    }
    nl.z = nl.model.add_var(1.0, -lp::kInf, lp::kInf);

    lp::Row cardinality;
    cardinality.sense = lp::Sense::EQ;
    cardinality.rhs = p_;
    for (int j = 0; j < m_; ++j) cardinality.entries.push_back({j, 1.0});
    nl.model.add_row(std::move(cardinality));

    const double zlb = cfg_.use_lifting ? std::max(lb_init_, node.lb) : 0.0;
    nl.zrow = nl.model.add_row({{{nl.z, 1.0}}, lp::Sense::GE, zlb});

    for (std::size_t k = 0; k < pool_.size(); ++k) {
      if (!pool_[k].active) continue;
      const int rid = nl.model.add_row(pool_[k].cut.to_row(nl.z));
      nl.active_pool_rows.push_back(rid);
      nl.active_pool_idx.push_back(static_cast<int>(k));
    }
    for (const LocalCutNode* lc = node.local.get(); lc; lc = lc->parent.get())
      for (const auto& cut : lc->cuts) nl.model.add_row(cut.to_row(nl.z));
    return nl;
  }

  void add_cut_row(NodeLp& nl, LiftedCut cut, bool at_root,
                   std::vector<LiftedCut>& new_local) {
    const int rid = nl.model.add_row(cut.to_row(nl.z));
    ++cuts_added_;
    if (at_root) {
      PoolCut pc;
      pc.cut = std::move(cut);
      pc.row_id = rid;
      nl.active_pool_rows.push_back(rid);
      nl.active_pool_idx.push_back(static_cast<int>(pool_.size()));
      pool_.push_back(std::move(pc));
    } else {
      new_local.push_back(std::move(cut));
    }
  }

  // Root-pool maintenance: cuts slack for 10 consecutive root re-solves
  // leave the active LP; violated pool cuts come back. Returns the number
  // of newly deactivated rows.
  int update_pool(NodeLp& nl, std::span<const double> y, double z_star,
                  bool at_root, std::vector<LiftedCut>& new_local) {
    int purged = 0;
    if (at_root) {
      for (std::size_t a = 0; a < nl.active_pool_idx.size(); ++a) {
        PoolCut& pc = pool_[nl.active_pool_idx[a]];
        if (!pc.active) continue;
        const double slack = z_star - pc.cut.rhs_at(y);
        if (slack > 1e-6) {
          if (++pc.slack_streak >= 10) {
            pc.active = false;
            nl.model.set_row_rhs(nl.active_pool_rows[a], -1e9);
            ++purged;
          }
        } else {
          pc.slack_streak = 0;
        }
      }
    }
    for (std::size_t k = 0; k < pool_.size(); ++k) {
      PoolCut& pc = pool_[k];
      if (pc.active) continue;
      if (pc.cut.rhs_at(y) - z_star > cfg_.violation_tol) {
        pc.active = true;
        pc.slack_streak = 0;
        bool restored = false;
        if (at_root) {
          for (std::size_t a = 0; a < nl.active_pool_idx.size(); ++a)
            if (nl.active_pool_idx[a] == static_cast<int>(k)) {
              nl.model.set_row_rhs(nl.active_pool_rows[a],
                                   pc.cut.anchor_radius);
              restored = true;
              break;
            }
        }
        if (!restored) {
          const int rid = nl.model.add_row(pc.cut.to_row(nl.z));
          if (at_root) {
            nl.active_pool_rows.push_back(rid);
            nl.active_pool_idx.push_back(static_cast<int>(k));
          }
        }
        (void)new_local;
      }
    }
    return purged;
  }

  int separation_round_maxviolated(NodeLp& nl, std::span<const double> y,
                                   double z_star, double lift_lb, bool at_root,
                                   std::vector<LiftedCut>& new_local) {
    std::vector<SeparationResult> violated;
    for (int i = 0; i < n_; ++i) {
      auto sep = max_violation(inst_, i, lift_lb, y, z_star);
      if (sep.violation > cfg_.violation_tol) violated.push_back(sep);
    }
    std::sort(violated.begin(), violated.end(),
              [](const SeparationResult& a, const SeparationResult& b) {
                if (a.violation != b.violation) return a.violation > b.violation;
                return a.customer < b.customer;
              });
    const int limit = at_root ? cfg_.max_num_cuts_root : cfg_.max_num_cuts_tree;
    int added = 0;
    for (const auto& sep : violated) {
      if (added >= limit) break;
      if (sep.anchor_site < 0) continue;  // collapses to z >= LB
      add_cut_row(nl, build_cut(inst_, sep.customer, sep.anchor_site, lift_lb),
                  at_root, new_local);
      ++added;
    }
    return added;
  }

  int separation_round_fixedcustomer(NodeLp& nl, std::span<const double> y,
                                     double z_star, double lift_lb,
                                     bool at_root,
                                     std::vector<LiftedCut>& new_local) {
    int added = 0;
    std::vector<SeparationResult> inside;
    for (int i : ihat_) {
      auto sep = max_violation(inst_, i, lift_lb, y, z_star);
      if (sep.violation > cfg_.violation_tol) inside.push_back(sep);
    }
    std::sort(inside.begin(), inside.end(),
              [](const SeparationResult& a, const SeparationResult& b) {
                if (a.violation != b.violation) return a.violation > b.violation;
                return a.customer < b.customer;
              });
    for (const auto& sep : inside)
      if (sep.anchor_site >= 0) {
        add_cut_row(nl, build_cut(inst_, sep.customer, sep.anchor_site, lift_lb),
                    at_root, new_local);
        ++added;
      }

    std::vector<SeparationResult> outside;
    for (int i = 0; i < n_; ++i) {
      if (ihat_member_[i]) continue;
      auto sep = max_violation(inst_, i, lift_lb, y, z_star);
      if (sep.violation > cfg_.violation_tol) outside.push_back(sep);
    }
    std::sort(outside.begin(), outside.end(),
              [](const SeparationResult& a, const SeparationResult& b) {
                if (a.violation != b.violation) return a.violation > b.violation;
                return a.customer < b.customer;
              });

    auto grow = [&](const SeparationResult& sep) {
      ihat_.push_back(sep.customer);
      ihat_member_[sep.customer] = 1;
      if (sep.anchor_site >= 0) {
        add_cut_row(nl,
                    build_cut(inst_, sep.customer, sep.anchor_site, lift_lb),
                    at_root, new_local);
        ++added;
      }
    };

    if (stall_fixed_ < cfg_.max_no_improvements_fixed) {
      if (!outside.empty()) grow(outside.front());
    } else {
      // Aggressive growth over a diversity-filtered candidate pool.
      stall_fixed_ = 0;
      std::vector<char> ibar(n_, 1);
      for (int i = 0; i < n_; ++i)
        if (ihat_member_[i]) ibar[i] = 0;
      for (const auto& sep : outside) {
        if (!ibar[sep.customer]) continue;
        grow(sep);
        for (int j = 0; j < std::min(n_, m_); ++j)
          if (inst_.distance(sep.customer, j) <= lift_lb) ibar[j] = 0;
      }
    }
    return added;
  }

  std::vector<Node> process_node(Node node) {
    const bool at_root = node.depth == 0;
    NodeLp nl = build_model(node);
    std::vector<LiftedCut> new_local;
    lp::Basis basis;

    int iterations = 0;
    int stall = 0;
    int purged_pending = 0;
    double z_prev = -kInfD;
    std::vector<double> y_frac;  // last fractional point for branching
    bool have_point = false;

    for (;;) {
      if (timed_out()) break;
      auto sol = lp::solve(nl.model, basis.empty() ? nullptr : &basis);
      if (sol.status == lp::Status::Infeasible) return {};
      if (sol.status != lp::Status::Optimal) break;  // keep last valid point
      basis = sol.basis;
      const std::span<const double> y(sol.primal.data(), m_);
      const double z_star = sol.primal[nl.z];
      y_frac.assign(y.begin(), y.end());
      have_point = true;

      node.lb = std::max(node.lb, z_star);
      if (effective_bound(node.lb) >= ub_ - 1e-9) return {};

      const double lift_lb =
          cfg_.use_lifting ? std::max(lb_init_, effective_bound(node.lb)) : 0.0;

      bool zrow_raised = false;
      if (cfg_.use_lifting && lift_lb > nl.model.row(nl.zrow).rhs + 1e-12) {
        nl.model.set_row_rhs(nl.zrow, lift_lb);
        zrow_raised = true;
      }

      if (cfg_.use_heuristic) {
        const auto h = greedy_from_lp(inst_, y, p_);
        maybe_update_incumbent(h.sites);
        if (effective_bound(node.lb) >= ub_ - 1e-9) return {};
      }

      log_progress(node, iterations, z_star);

      // Integer candidate: lazy feasibility check, one cut at a time.
      bool is_integral = true;
      for (int j = 0; j < m_; ++j)
        if (y[j] > 1e-6 && y[j] < 1 - 1e-6) {
          is_integral = false;
          break;
        }
      if (is_integral) {
        SeparationResult worst;
        worst.violation = 0;
        for (int i = 0; i < n_; ++i) {
          auto sep = max_violation(inst_, i, lift_lb, y, z_star);
          if (sep.violation > worst.violation) worst = sep;
        }
        if (worst.violation > cfg_.violation_tol && worst.anchor_site >= 0) {
          add_cut_row(nl,
                      build_cut(inst_, worst.customer, worst.anchor_site,
                                lift_lb),
                      at_root, new_local);
          continue;
        }
        if (worst.violation > cfg_.violation_tol && worst.anchor_site < 0) {
          // z below the lift bound; the raised z row closes this.
          if (zrow_raised) continue;
          nl.model.set_row_rhs(nl.zrow, lift_lb);
          continue;
        }
        std::vector<int> support;
        for (int j = 0; j < m_; ++j)
          if (y[j] > 0.5) support.push_back(j);
        maybe_update_incumbent(support);
        return {};
      }

      // Separation budget, mirroring the callback counters.
      ++iterations;
      const int max_sep = at_root ? cfg_.max_num_sep_root : cfg_.max_num_sep_tree;
      if (iterations > max_sep) break;
      if (z_star - z_prev < cfg_.epsilon_improve) {
        ++stall;
        ++stall_fixed_;
        if (stall >= cfg_.max_no_improvements) break;
      }
      z_prev = z_star;

      int added = 0;
      if (cfg_.scheme == Scheme::MaxViolated)
        added = separation_round_maxviolated(nl, y, z_star, lift_lb, at_root,
                                             new_local);
      else
        added = separation_round_fixedcustomer(nl, y, z_star, lift_lb, at_root,
                                               new_local);
      purged_pending += update_pool(nl, y, z_star, at_root, new_local);
      // Deactivated rows linger in the LP with a slack rhs; once enough
      // pile up, rebuild the root model without them to keep the basis
      // small.
      if (at_root && purged_pending >= 25) {
        // Remap the warm basis: structural states survive, slack states
        // follow their rows (purged rows carry basic slacks, so dropping
        // them keeps the basic count consistent).
        lp::Basis warm;
        if (!basis.empty()) {
          const int ns = m_ + 1;
          warm.state.assign(basis.state.begin(), basis.state.begin() + ns);
          warm.state.push_back(basis.state[ns + 0]);
          warm.state.push_back(basis.state[ns + 1]);
          std::vector<std::pair<int, int>> kept;  // (pool index, old row)
          for (std::size_t a = 0; a < nl.active_pool_idx.size(); ++a)
            if (pool_[nl.active_pool_idx[a]].active)
              kept.push_back({nl.active_pool_idx[a], nl.active_pool_rows[a]});
          std::sort(kept.begin(), kept.end());
          for (const auto& [idx, rid] : kept)
            warm.state.push_back(basis.state[ns + rid]);
        }
        nl = build_model(node);
        basis = std::move(warm);
        purged_pending = 0;
      }
      if (added == 0 && !zrow_raised) break;
    }

    if (!have_point) return {};

    // Branch on the most fractional free site.
    int branch_var = -1;
    double best_frac = 2.0;
    for (int j = 0; j < m_; ++j) {
      if (node.fix[j] != -1) continue;
      const double f = std::abs(y_frac[j] - 0.5);
      if (y_frac[j] > 1e-6 && y_frac[j] < 1 - 1e-6 && f < best_frac - 1e-12) {
        best_frac = f;
        branch_var = j;
      }
    }
    if (branch_var < 0) {
      // Fractional solve ended on an integral point without acceptance;
      // fall back to any free variable to keep the dive finite.
      for (int j = 0; j < m_; ++j)
        if (node.fix[j] == -1) {
          branch_var = j;
          break;
        }
      if (branch_var < 0) return {};
    }

    auto chain = node.local;
    if (!new_local.empty()) {
      auto lc = std::make_shared<LocalCutNode>();
      lc->parent = node.local;
      lc->cuts = std::move(new_local);
      chain = lc;
    }

    std::vector<Node> children(2);
    for (int b = 0; b < 2; ++b) {
      children[b].id = next_id_++;
      children[b].parent_id = node.id;
      children[b].fix = node.fix;
      children[b].fix[branch_var] = static_cast<signed char>(b);
      children[b].local = chain;
      children[b].lb = node.lb;
      children[b].depth = node.depth + 1;
    }
    return children;
  }

  void log_progress(const Node& node, int iter, double z_star) {
    if (!cfg_.verbose || !cfg_.log) return;
    nlohmann::json j{{"node", node.id},
                     {"iter", iter},
                     {"z", z_star},
                     {"lb", node.lb},
                     {"ub", std::isfinite(ub_) ? ub_ : -1.0},
                     {"cuts", cuts_added_},
                     {"sample_size", static_cast<long>(ihat_.size())}};
    (*cfg_.log) << j.dump() << "\n";
  }

  SolveResult finish(SolveStatus status, double frontier_lb) {
    SolveResult res;
    res.status = status;
    if (status == SolveStatus::Optimal && !std::isfinite(ub_))
      res.status = SolveStatus::Infeasible;
    if (std::isfinite(ub_)) res.best_solution = best_;
    res.lower_bound = status == SolveStatus::Optimal
                          ? ub_
                          : std::min(std::max(frontier_lb, lb_init_), ub_);
    if (!std::isfinite(ub_)) {
      res.gap_percent = 100.0;
    } else if (ub_ == 0.0) {
      res.gap_percent = 0.0;
    } else {
      res.gap_percent = (ub_ - res.lower_bound) / ub_ * 100.0;
    }
    res.nodes = nodes_;
    res.cuts_added = cuts_added_;
    res.wall_time = elapsed();
    return res;
  }

  const Instance& inst_;
  int p_;
  SolverConfig cfg_;
  int n_ = 0, m_ = 0;
  bool integral_ = true;

  double lb_init_ = 0;
  double ub_ = kInfD;
  PrimalSolution best_;
  std::vector<PoolCut> pool_;
  std::vector<int> ihat_;
  std::vector<char> ihat_member_;
  int stall_fixed_ = 0;

  long next_id_ = 0;
  long nodes_ = 0;
  long cuts_added_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveResult solve(const Instance& inst, int p, const SolverConfig& config) {
  if (p < 1 || p > inst.n_sites())
    throw SizeError("solve: p must satisfy 1 <= p <= n_sites");
  Engine engine(inst, p, config);
  return engine.run();
}

}  // namespace pcenter
