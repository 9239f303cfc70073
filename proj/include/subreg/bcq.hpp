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

#ifndef SUBREG_BCQ_HPP_
#define SUBREG_BCQ_HPP_

#include <cstdint>
#include <map>

#include "subreg/base_points.hpp"

namespace subreg {

/// Least τ with g ∈ τ(D*F(x,ȳ)(B_{Y*}) + N(A,x) ∩ B_{X*}), as one LP in
/// homogenized variables: g = Σλa^x + Σμe^x + Σκc + Σνf where (a, e) are
/// the active graph rows and (c, f) the active A rows, with the dual norms
/// of Σλa^y + Σμe^y and Σκc + Σνf bounded by τ. +∞ when infeasible.
inline double bcq_generator_tau(const LocalCones& lc, const Vec& g) {
  const Eigen::Index nx = lc.nx, ny = lc.ny;
  const Polyhedron& tg = lc.graph;
  const Polyhedron& ta = lc.a;
  const Eigen::Index nl = tg.num_ineq(), nm = tg.num_eq();
  const Eigen::Index nk = ta.num_ineq(), nn = ta.num_eq();
  const Eigen::Index L = 1, M = L + nl, K = M + nm, N = K + nk;
  const Eigen::Index d = N + nn;
  const Mat wy = lc.norm_y.ball_vertices(ny);
  const Mat wx = lc.norm_x.ball_vertices(nx);

  LpProblem lp = LpProblem::over(d);
  lp.objective(0) = 1.0;
  lp.eq_lhs = Mat::Zero(nx, d);
  lp.eq_lhs.block(0, L, nx, nl) = tg.ineq_lhs().leftCols(nx).transpose();
  lp.eq_lhs.block(0, M, nx, nm) = tg.eq_lhs().leftCols(nx).transpose();
  lp.eq_lhs.block(0, K, nx, nk) = ta.ineq_lhs().transpose();
  lp.eq_lhs.block(0, N, nx, nn) = ta.eq_lhs().transpose();
  lp.eq_rhs = g;

  const Eigen::Index rows = wy.rows() + (nk + nn > 0 ? wx.rows() : 0) + 1 + nl + nk;
  lp.ineq_lhs = Mat::Zero(rows, d);
  lp.ineq_rhs = Vec::Zero(rows);
  Eigen::Index r = 0;
  const Mat gy = tg.ineq_lhs().rightCols(ny);
  const Mat ey = tg.eq_lhs().rightCols(ny);
  for (Eigen::Index k = 0; k < wy.rows(); ++k, ++r) {
    lp.ineq_lhs(r, 0) = -1.0;
    lp.ineq_lhs.block(r, L, 1, nl) = wy.row(k) * gy.transpose();
    lp.ineq_lhs.block(r, M, 1, nm) = wy.row(k) * ey.transpose();
  }
  if (nk + nn > 0) {
    for (Eigen::Index k = 0; k < wx.rows(); ++k, ++r) {
      lp.ineq_lhs(r, 0) = -1.0;
      lp.ineq_lhs.block(r, K, 1, nk) = wx.row(k) * ta.ineq_lhs().transpose();
      lp.ineq_lhs.block(r, N, 1, nn) = wx.row(k) * ta.eq_lhs().transpose();
    }
  }
  lp.ineq_lhs(r++, 0) = -1.0;
  for (Eigen::Index i = 0; i < nl; ++i) lp.ineq_lhs(r++, L + i) = -1.0;
  for (Eigen::Index i = 0; i < nk; ++i) lp.ineq_lhs(r++, K + i) = -1.0;

  const LpResult res = lp_solve(lp);
  if (res.status == LpStatus::kInfeasible) return kInf;
  if (!res.optimal()) fail(ErrorCode::kInvalidArgument, "BCQ program unbounded below");
  const double tau = std::max(0.0, *res.value);
  return tau > kTauCap ? kInf : tau;
}

/// Least τ for which the strong BCQ inclusion holds at one base point:
/// the max over the vertices of N(S,x) ∩ B_{X*}.
inline double bcq_min_tau(const LocalCones& lc) {
  double best = 0.0;
  for (const Vec& g : normal_ball_generators(lc)) {
    best = std::max(best, bcq_generator_tau(lc, g));
    if (best == kInf) break;
  }
  return best;
}

inline double bcq_min_tau(const ConstraintSystem& sys, const Vec& x) {
  return bcq_min_tau(local_cones(sys, x));
}

/// Per radius: sup of bcq_min_tau over base points of S ∩ B(x̄, δ).
inline DeltaCurve bcq_inf(const ConstraintSystem& sys, const std::vector<double>& schedule,
                          int base_samples = 4, std::uint64_t seed = 0) {
  check_schedule(schedule);
  std::map<std::vector<Eigen::Index>, double> cache;
  DeltaCurve out;
  for (double delta : schedule) {
    double best = 0.0;
    for (const BasePoint& bp : base_points(sys, delta, base_samples, seed)) {
      auto it = cache.find(bp.signature);
      if (it == cache.end()) it = cache.emplace(bp.signature, bcq_min_tau(sys, bp.x)).first;
      best = std::max(best, it->second);
    }
    out.delta.push_back(delta);
    out.value.push_back(best);
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_BCQ_HPP_
