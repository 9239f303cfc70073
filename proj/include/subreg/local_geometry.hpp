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

#ifndef SUBREG_LOCAL_GEOMETRY_HPP_
#define SUBREG_LOCAL_GEOMETRY_HPP_

#include <vector>

#include "subreg/constraint_system.hpp"
#include "subreg/projection.hpp"
#include "subreg/vrep.hpp"

namespace subreg {

inline constexpr double kEtaCap = 1e6;
inline constexpr double kTauCap = 1e6;
inline constexpr double kEpsGrid = 1e-6;
inline constexpr double kTolBisect = 1e-4;

/// The three contingent cones at a solution point, plus the norms.
struct LocalCones {
  Eigen::Index nx = 0;
  Eigen::Index ny = 0;
  PolyNorm norm_x;
  PolyNorm norm_y;
  Polyhedron graph;  // T(gph F, (x, ȳ)) over (u, v)
  Polyhedron a;      // T(A, x)
  Polyhedron s;      // T(S, x)
};

inline LocalCones local_cones(const ConstraintSystem& sys, const Vec& x) {
  require_in_s(sys, x);
  return LocalCones{sys.nx(), sys.ny(), sys.norm_x(), sys.norm_y(),
                    tangent_cone(sys.graph(), concat(x, sys.ybar())),
                    tangent_cone(sys.A(), x), tangent_cone(sys.S(), x)};
}

/// Active S rows at x; points sharing a signature share all three cones.
inline std::vector<Eigen::Index> signature(const ConstraintSystem& sys, const Vec& x) {
  return active_rows(sys.S(), x);
}

/// Lifted description of ∪_{η₁+η₂ <= 1} DF⁻¹(ȳ,x)(η₁B_Y) ∩ (T(A,x) + η₂B_X)
/// over (u, v, t, s): (u, v) ∈ T(gph F), t ∈ T(A), ‖v‖ <= s, ‖u − t‖ <= 1 − s.
/// The same set is {u : d(0, DF(x,ȳ)(u)) + d(u, T(A,x)) <= 1}.
inline Polyhedron lifted_unit_lhs(const LocalCones& lc) {
  const Eigen::Index nx = lc.nx, ny = lc.ny;
  const bool free_a = lc.a.is_whole_space();
  const Eigen::Index tdim = free_a ? 0 : nx;
  const Eigen::Index d = nx + ny + tdim + 1;
  const Eigen::Index si = d - 1;
  const Mat dy = lc.norm_y.dual_ball_vertices(ny);
  const Mat dx = lc.norm_x.dual_ball_vertices(nx);

  Polyhedron p(d);
  for (Eigen::Index i = 0; i < lc.graph.num_ineq(); ++i) {
    Vec row = Vec::Zero(d);
    row.head(nx + ny) = lc.graph.ineq_lhs().row(i).transpose();
    p.add_ineq(row, 0.0);
  }
  for (Eigen::Index i = 0; i < lc.graph.num_eq(); ++i) {
    Vec row = Vec::Zero(d);
    row.head(nx + ny) = lc.graph.eq_lhs().row(i).transpose();
    p.add_eq(row, 0.0);
  }
  for (Eigen::Index k = 0; k < dy.rows(); ++k) {
    Vec row = Vec::Zero(d);
    row.segment(nx, ny) = dy.row(k).transpose();
    row(si) = -1.0;
    p.add_ineq(row, 0.0);
  }
  if (free_a) {
    Vec row = Vec::Zero(d);
    row(si) = 1.0;
    p.add_ineq(row, 1.0);
  } else {
    for (Eigen::Index i = 0; i < lc.a.num_ineq(); ++i) {
      Vec row = Vec::Zero(d);
      row.segment(nx + ny, nx) = lc.a.ineq_lhs().row(i).transpose();
      p.add_ineq(row, 0.0);
    }
    for (Eigen::Index i = 0; i < lc.a.num_eq(); ++i) {
      Vec row = Vec::Zero(d);
      row.segment(nx + ny, nx) = lc.a.eq_lhs().row(i).transpose();
      p.add_eq(row, 0.0);
    }
    for (Eigen::Index k = 0; k < dx.rows(); ++k) {
      Vec row = Vec::Zero(d);
      row.head(nx) = dx.row(k).transpose();
      row.segment(nx + ny, nx) = -dx.row(k).transpose();
      row(si) = 1.0;
      p.add_ineq(row, 1.0);
    }
  }
  Vec row = Vec::Zero(d);
  row(si) = -1.0;
  p.add_ineq(row, 0.0);
  return p;
}

/// V-representation of the unit left-hand set in u-space.
inline ConeVRep unit_lhs_vrep(const LocalCones& lc) {
  if (lc.nx > kVrepDimCap) {
    fail(ErrorCode::kDimCap, "nx above the vertex enumeration cap");
  }
  return enumerate_vrep(fm_project(lifted_unit_lhs(lc), lc.nx));
}

/// Nonzero vertices of N(S,x) ∩ B_{X*}; N(S,x) is the polar of T(S,x).
inline std::vector<Vec> normal_ball_generators(const LocalCones& lc) {
  if (lc.nx > kVrepDimCap) {
    fail(ErrorCode::kDimCap, "nx above the vertex enumeration cap");
  }
  const ConeVRep t = enumerate_vrep(lc.s);
  Polyhedron polar(lc.nx);
  for (const Vec& r : t.rays) polar.add_ineq(r, 0.0);
  polar = intersect(polar, unit_ball(lc.norm_x.dual(), lc.nx));
  std::vector<Vec> out;
  for (const Vec& g : enumerate_vrep(polar).vertices) {
    if (g.cwiseAbs().maxCoeff() > 1e-10) out.push_back(g);
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_LOCAL_GEOMETRY_HPP_
