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

#ifndef SUBREG_BASE_POINTS_HPP_
#define SUBREG_BASE_POINTS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "subreg/local_geometry.hpp"
#include "subreg/sampling.hpp"

namespace subreg {

/// Faces are enumerated exhaustively when at most this many S rows can
/// become active inside the ball; beyond that only sampled points are used.
inline constexpr int kFaceEnumRows = 12;

/// One value per radius of a decreasing schedule; the last is the headline.
struct DeltaCurve {
  std::vector<double> delta;
  std::vector<double> value;

  double headline() const { return value.empty() ? 0.0 : value.back(); }
};

inline void check_schedule(const std::vector<double>& schedule) {
  if (schedule.empty()) fail(ErrorCode::kInvalidArgument, "empty radius schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) {
      fail(ErrorCode::kInvalidArgument, "radii must be positive and finite");
    }
    if (i > 0 && !(schedule[i] < schedule[i - 1])) {
      fail(ErrorCode::kInvalidArgument, "radius schedule must be decreasing");
    }
  }
}

/// (0.5, 0.25, 0.1, 0.05) scaled by the local radius of the instance.
inline std::vector<double> default_schedule(const ConstraintSystem& sys) {
  const double r = local_radius(sys);
  return {0.5 * r, 0.25 * r, 0.1 * r, 0.05 * r};
}

struct BasePoint {
  Vec x;
  std::vector<Eigen::Index> signature;
};

namespace detail {

/// A point of S ∩ B(x̄, 0.99δ) where exactly the rows in `tight` (among
/// `candidates`) are active, or nothing if that face misses the ball.
inline std::optional<Vec> face_point(const ConstraintSystem& sys, double delta,
                                     const std::vector<Eigen::Index>& candidates,
                                     std::uint32_t mask) {
  const Polyhedron& s = sys.S();
  const Eigen::Index n = sys.nx();
  const Mat ball = sys.norm_x().dual_ball_vertices(n);
  LpProblem lp = LpProblem::over(n + 1);
  lp.objective(n) = 1.0;
  lp.sense = Sense::kMaximize;
  std::vector<bool> is_candidate(static_cast<std::size_t>(s.num_ineq()), false);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Eigen::Index i = candidates[k];
    is_candidate[static_cast<std::size_t>(i)] = true;
    Vec row(n + 1);
    row.head(n) = s.ineq_lhs().row(i).transpose();
    row(n) = 0.0;
    if (mask & (1u << k)) {
      lp.add_eq(row, s.ineq_rhs()(i));
    } else {
      row(n) = row_scale(s.ineq_lhs(), i);
      lp.add_ineq(row, s.ineq_rhs()(i));
    }
  }
  for (Eigen::Index i = 0; i < s.num_ineq(); ++i) {
    if (is_candidate[static_cast<std::size_t>(i)]) continue;
    Vec row(n + 1);
    row.head(n) = s.ineq_lhs().row(i).transpose();
    row(n) = 0.0;
    lp.add_ineq(row, s.ineq_rhs()(i));
  }
  for (Eigen::Index i = 0; i < s.num_eq(); ++i) {
    Vec row(n + 1);
    row.head(n) = s.eq_lhs().row(i).transpose();
    row(n) = 0.0;
    lp.add_eq(row, s.eq_rhs()(i));
  }
  for (Eigen::Index k = 0; k < ball.rows(); ++k) {
    Vec row(n + 1);
    row.head(n) = ball.row(k).transpose();
    row(n) = 0.0;
    lp.add_ineq(row, 0.99 * delta + ball.row(k).dot(sys.xbar()));
  }
  Vec cap = Vec::Unit(n + 1, n);
  lp.add_ineq(cap, delta);
  LpResult r = lp_solve(lp);
  if (!r.optimal() || *r.value < 1e-3 * delta) return std::nullopt;
  return Vec(r.point->head(n));
}

}  // namespace detail

/// Representative solution points in S ∩ B(x̄, δ), one per active-row
/// signature, x̄ first. Relative interiors of all faces meeting the ball
/// are covered when the row count allows it; vertices of S inside the ball
/// and projections of `base_samples` random ball points are added.
inline std::vector<BasePoint> base_points(const ConstraintSystem& sys, double delta,
                                          int base_samples, std::uint64_t seed) {
  if (!(delta > 0.0)) fail(ErrorCode::kInvalidArgument, "radius must be > 0");
  const Polyhedron& s = sys.S();
  const PolyNorm nm = sys.norm_x();
  std::vector<BasePoint> out;
  std::map<std::vector<Eigen::Index>, std::size_t> seen;
  auto add = [&](const Vec& x) {
    if (!contains(s, x, tol::kActive)) return;
    auto sig = signature(sys, x);
    if (seen.count(sig)) return;
    seen.emplace(sig, out.size());
    out.push_back({x, std::move(sig)});
  };
  add(sys.xbar());

  // Rows that can be active somewhere in the ball.
  std::vector<Eigen::Index> candidates;
  const PolyNorm dual = nm.dual();
  for (Eigen::Index i = 0; i < s.num_ineq(); ++i) {
    const Vec a = s.ineq_lhs().row(i).transpose();
    const double slack = s.ineq_rhs()(i) - a.dot(sys.xbar());
    if (slack <= delta * dual(a) + tol::kActive * row_scale(s.ineq_lhs(), i)) {
      candidates.push_back(i);
    }
  }
  if (static_cast<int>(candidates.size()) <= kFaceEnumRows) {
    const std::uint32_t total = 1u << candidates.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
      if (auto p = detail::face_point(sys, delta, candidates, mask)) add(*p);
    }
  }

  if (sys.nx() <= kVrepDimCap) {
    try {
      for (const Vec& v : enumerate_vrep(s).vertices) {
        if (nm(v - sys.xbar()) <= delta) add(v);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDimCap) throw;
    }
  }

  std::mt19937_64 rng = stream_rng(seed, 0xBA5E);
  for (int k = 0; k < base_samples; ++k) {
    const Vec x = sys.xbar() + sample_ball(rng, nm, sys.nx(), delta);
    auto np = nearest_point(s, x, nm);
    if (!np) continue;
    Vec p = np->point;
    const double r = nm(p - sys.xbar());
    if (r > delta) p = sys.xbar() + (0.99 * delta / r) * (p - sys.xbar());
    add(p);
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_BASE_POINTS_HPP_
