// Copyright 2026 The polysubreg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBREG_LP_HPP_
#define SUBREG_LP_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "subreg/error.hpp"
#include "subreg/linalg.hpp"

namespace subreg {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
enum class Sense { kMinimize, kMaximize };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

/// Dense linear program over free variables:
///   optimize objective·x  s.t.  ineq_lhs·x <= ineq_rhs,  eq_lhs·x == eq_rhs.
struct LpProblem {
  Vec objective;
  Mat ineq_lhs;
  Vec ineq_rhs;
  Mat eq_lhs;
  Vec eq_rhs;
  Sense sense = Sense::kMinimize;

  /// Zero objective and no constraints over `dim` variables.
  static LpProblem over(Eigen::Index dim) {
    LpProblem p;
    p.objective = Vec::Zero(dim);
    p.ineq_lhs = Mat(0, dim);
    p.ineq_rhs = Vec(0);
    p.eq_lhs = Mat(0, dim);
    p.eq_rhs = Vec(0);
    return p;
  }

  Eigen::Index dim() const { return objective.size(); }

  void add_ineq(const Vec& row, double rhs) {
    ineq_lhs.conservativeResize(ineq_lhs.rows() + 1, dim());
    ineq_lhs.row(ineq_lhs.rows() - 1) = row.transpose();
    ineq_rhs.conservativeResize(ineq_rhs.size() + 1);
    ineq_rhs(ineq_rhs.size() - 1) = rhs;
  }

  void add_eq(const Vec& row, double rhs) {
    eq_lhs.conservativeResize(eq_lhs.rows() + 1, dim());
    eq_lhs.row(eq_lhs.rows() - 1) = row.transpose();
    eq_rhs.conservativeResize(eq_rhs.size() + 1);
    eq_rhs(eq_rhs.size() - 1) = rhs;
  }
};

/// Outcome of `lp_solve`. On `kUnbounded` the point slot holds an improving
/// ray of the feasible set; on `kInfeasible` it is empty.
///
/// Duals (when requested) satisfy objective = ineq_lhsᵀ·ineq_duals +
/// eq_lhsᵀ·eq_duals, with ineq_duals <= 0 for minimization and >= 0 for
/// maximization, so ineq_rhs·ineq_duals + eq_rhs·eq_duals bounds the optimum.
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::optional<Vec> point;
  std::optional<double> value;
  Vec ineq_duals;
  Vec eq_duals;
  int iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

struct LpOptions {
  bool duals = false;
  int iteration_cap = 10000;
};

namespace detail {

inline void validate(const LpProblem& p) {
  const auto d = p.dim();
  require_dim(p.ineq_lhs.cols(), d, "ineq_lhs columns");
  require_dim(p.eq_lhs.cols(), d, "eq_lhs columns");
  require_dim(p.ineq_rhs.size(), p.ineq_lhs.rows(), "ineq_rhs length");
  require_dim(p.eq_rhs.size(), p.eq_lhs.rows(), "eq_rhs length");
  if (!all_finite(p.objective) || !all_finite(p.ineq_lhs) ||
      !all_finite(p.ineq_rhs) || !all_finite(p.eq_lhs) ||
      !all_finite(p.eq_rhs)) {
    fail(ErrorCode::kInvalidArgument, "LP data must be finite");
  }
}

// Two-phase primal simplex on a dense tableau. Free variables are split as
// x = x⁺ − x⁻, inequality rows get slacks, rows without a feasible slack get
// artificials. Entering and leaving choices follow Bland's rule.
class Simplex {
 public:
  Simplex(const LpProblem& p, const LpOptions& opt) : p_(p), opt_(opt) {
    d_ = static_cast<int>(p.dim());
    r_ = static_cast<int>(p.ineq_lhs.rows());
    s_ = static_cast<int>(p.eq_lhs.rows());
    m_ = r_ + s_;
    sign_.assign(m_, 1.0);
    int artificial = 0;
    std::vector<bool> needs_art(m_, false);
    for (int i = 0; i < r_; ++i) {
      if (p.ineq_rhs(i) < 0) {
        sign_[i] = -1.0;
        needs_art[i] = true;
        ++artificial;
      }
    }
    for (int i = 0; i < s_; ++i) {
      if (p.eq_rhs(i) < 0) sign_[r_ + i] = -1.0;
      needs_art[r_ + i] = true;
      ++artificial;
    }
    art_start_ = 2 * d_ + r_;
    n_ = art_start_ + artificial;
    stride_ = n_ + 1;
    t_.assign(static_cast<std::size_t>(m_ + 1) * stride_, 0.0);
    basis_.assign(m_, -1);
    dead_.assign(m_, false);
    int next_art = art_start_;
    for (int i = 0; i < m_; ++i) {
      const double sg = sign_[i];
      for (int k = 0; k < d_; ++k) {
        const double a = i < r_ ? p.ineq_lhs(i, k) : p.eq_lhs(i - r_, k);
        at(i, k) = sg * a;
        at(i, d_ + k) = -sg * a;
      }
      if (i < r_) at(i, 2 * d_ + i) = sg;
      at(i, n_) = sg * (i < r_ ? p.ineq_rhs(i) : p.eq_rhs(i - r_));
      if (needs_art[i]) {
        at(i, next_art) = 1.0;
        basis_[i] = next_art++;
      } else {
        basis_[i] = 2 * d_ + i;
      }
    }
    if (opt_.duals) initial_ = t_;
    rhs_scale_ = 1.0;
    for (int i = 0; i < m_; ++i) {
      rhs_scale_ = std::max(rhs_scale_, std::abs(at(i, n_)));
    }
  }

  LpResult solve() {
    LpResult res;
    // Phase 1: minimize the sum of artificials.
    if (n_ > art_start_) {
      for (int j = 0; j <= n_; ++j) at(m_, j) = 0.0;
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] >= art_start_) {
          for (int j = 0; j <= n_; ++j) {
            if (j < art_start_ || j == n_) at(m_, j) -= at(i, j);
          }
        }
      }
      int col = -1;
      iterate(&col);
      const double infeas = -at(m_, n_);
      if (infeas > tol::kLp * rhs_scale_) {
        res.status = LpStatus::kInfeasible;
        res.iterations = iterations_;
        return res;
      }
      drive_out_artificials();
    }
    // Phase 2.
    std::vector<double> cost(n_, 0.0);
    const double sense = p_.sense == Sense::kMaximize ? -1.0 : 1.0;
    for (int k = 0; k < d_; ++k) {
      cost[k] = sense * p_.objective(k);
      cost[d_ + k] = -sense * p_.objective(k);
    }
    for (int j = 0; j <= n_; ++j) at(m_, j) = j < n_ ? cost[j] : 0.0;
    for (int i = 0; i < m_; ++i) {
      if (dead_[i]) continue;
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= n_; ++j) at(m_, j) -= cb * at(i, j);
    }
    int col = -1;
    const bool bounded = iterate(&col);
    res.iterations = iterations_;
    if (!bounded) {
      res.status = LpStatus::kUnbounded;
      std::vector<double> dir(n_, 0.0);
      dir[col] = 1.0;
      for (int i = 0; i < m_; ++i) {
        if (!dead_[i]) dir[basis_[i]] -= at(i, col);
      }
      Vec ray(d_);
      for (int k = 0; k < d_; ++k) ray(k) = dir[k] - dir[d_ + k];
      res.point = ray;
      return res;
    }
    res.status = LpStatus::kOptimal;
    std::vector<double> val(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (!dead_[i]) val[basis_[i]] = std::max(0.0, at(i, n_));
    }
    Vec x(d_);
    for (int k = 0; k < d_; ++k) x(k) = val[k] - val[d_ + k];
    res.value = p_.objective.dot(x);
    res.point = std::move(x);
    if (opt_.duals) compute_duals(cost, &res);
    return res;
  }

 private:
  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * stride_ + j]; }
  double at(int i, int j) const {
    return t_[static_cast<std::size_t>(i) * stride_ + j];
  }

  void pivot(int r, int c) {
    const double inv = 1.0 / at(r, c);
    double* row = &t_[static_cast<std::size_t>(r) * stride_];
    for (int j = 0; j <= n_; ++j) row[j] *= inv;
    row[c] = 1.0;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* other = &t_[static_cast<std::size_t>(i) * stride_];
      const double f = other[c];
      if (f == 0.0) continue;
      for (int j = 0; j <= n_; ++j) other[j] -= f * row[j];
      other[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Returns false when the entering column certifies unboundedness.
  bool iterate(int* unbounded_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < art_start_; ++j) {
        if (at(m_, j) < -tol::kLp) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = kInf;
      for (int i = 0; i < m_; ++i) {
        if (dead_[i]) continue;
        const double a = at(i, enter);
        if (a <= tol::kPivot) continue;
        const double ratio = std::max(0.0, at(i, n_)) / a;
        const double eps = 1e-12 * (1.0 + std::abs(best));
        if (leave < 0 || ratio < best - eps) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + eps && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave < 0) {
        *unbounded_col = enter;
        return false;
      }
      if (++iterations_ > opt_.iteration_cap) {
        throw IterationCapError(
            iterations_, "simplex exceeded " +
                             std::to_string(opt_.iteration_cap) +
                             " iterations");
      }
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art_start_) continue;
      int best_j = -1;
      double best_a = 1e-9;
      for (int j = 0; j < art_start_; ++j) {
        if (std::abs(at(i, j)) > best_a) {
          best_a = std::abs(at(i, j));
          best_j = j;
        }
      }
      if (best_j >= 0) {
        pivot(i, best_j);
      } else {
        dead_[i] = true;
      }
    }
  }

  void compute_duals(const std::vector<double>& cost, LpResult* res) const {
    std::vector<int> live;
    for (int i = 0; i < m_; ++i) {
      if (!dead_[i]) live.push_back(i);
    }
    const int k = static_cast<int>(live.size());
    Mat basis_mat(k, k);
    Vec cb(k);
    for (int a = 0; a < k; ++a) {
      const int col = basis_[live[a]];
      cb(a) = cost[col];
      for (int b = 0; b < k; ++b) {
        basis_mat(b, a) =
            initial_[static_cast<std::size_t>(live[b]) * stride_ + col];
      }
    }
    Vec y = k > 0 ? Vec(basis_mat.transpose().fullPivLu().solve(cb)) : Vec();
    const double sense = p_.sense == Sense::kMaximize ? -1.0 : 1.0;
    Vec all = Vec::Zero(m_);
    for (int a = 0; a < k; ++a) all(live[a]) = sense * sign_[live[a]] * y(a);
    res->ineq_duals = all.head(r_);
    res->eq_duals = all.tail(s_);
  }

  const LpProblem& p_;
  LpOptions opt_;
  int d_ = 0, r_ = 0, s_ = 0, m_ = 0, n_ = 0, art_start_ = 0, stride_ = 0;
  std::vector<double> t_;
  std::vector<double> initial_;
  std::vector<int> basis_;
  std::vector<bool> dead_;
  std::vector<double> sign_;
  double rhs_scale_ = 1.0;
  int iterations_ = 0;
};

}  // namespace detail

inline LpResult lp_solve(const LpProblem& p, const LpOptions& opt = {}) {
  detail::validate(p);
  detail::Simplex simplex(p, opt);
  return simplex.solve();
}

struct Feasibility {
  bool feasible = false;
  std::optional<Vec> witness;
};

inline Feasibility lp_feasible(const Mat& ineq_lhs, const Vec& ineq_rhs,
                               const Mat& eq_lhs, const Vec& eq_rhs) {
  const Eigen::Index d = ineq_lhs.rows() > 0 ? ineq_lhs.cols() : eq_lhs.cols();
  if (ineq_lhs.rows() > 0 && eq_lhs.rows() > 0) {
    require_dim(eq_lhs.cols(), ineq_lhs.cols(), "eq_lhs columns");
  }
  LpProblem p = LpProblem::over(d);
  p.ineq_lhs = ineq_lhs.rows() > 0 ? ineq_lhs : Mat(0, d);
  p.ineq_rhs = ineq_rhs;
  p.eq_lhs = eq_lhs.rows() > 0 ? eq_lhs : Mat(0, d);
  p.eq_rhs = eq_rhs;
  LpResult r = lp_solve(p);
  Feasibility f;
  f.feasible = r.status != LpStatus::kInfeasible;
  if (f.feasible) f.witness = r.point;
  return f;
}

}  // namespace subreg

#endif  // SUBREG_LP_HPP_
