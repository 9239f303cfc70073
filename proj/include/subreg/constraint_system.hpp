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

#ifndef SUBREG_CONSTRAINT_SYSTEM_HPP_
#define SUBREG_CONSTRAINT_SYSTEM_HPP_

#include <sstream>
#include <string>
#include <utility>

#include "subreg/polyhedron.hpp"

namespace subreg {

/// The system ȳ ∈ F(x), x ∈ A with F given by its graph over (x, y).
/// Immutable once created; the solution set is materialized at creation.
class ConstraintSystem {
 public:
  static ConstraintSystem create(Polyhedron graph, Polyhedron a, Vec xbar,
                                 Vec ybar, PolyNorm norm_x = PolyNorm::linf(),
                                 PolyNorm norm_y = PolyNorm::linf(),
                                 std::string name = {}) {
    const Eigen::Index nx = xbar.size();
    const Eigen::Index ny = ybar.size();
    if (nx < 1 || ny < 1) {
      fail(ErrorCode::kInvalidInstance, "nx and ny must be positive");
    }
    if (graph.dim() != nx + ny) {
      fail(ErrorCode::kInvalidInstance, "graph has " + std::to_string(graph.dim()) +
                                            " columns, expected nx + ny = " +
                                            std::to_string(nx + ny));
    }
    if (a.dim() != nx) {
      fail(ErrorCode::kInvalidInstance, "A has " + std::to_string(a.dim()) +
                                            " columns, expected nx = " + std::to_string(nx));
    }
    if (!xbar.allFinite() || !ybar.allFinite()) {
      fail(ErrorCode::kInvalidInstance, "xbar and ybar must be finite");
    }
    check_rows(graph, concat(xbar, ybar), "graph");
    check_rows(a, xbar, "A");
    ConstraintSystem sys(std::move(graph), std::move(a), std::move(xbar),
                         std::move(ybar), norm_x, norm_y, std::move(name));
    return sys;
  }

  Eigen::Index nx() const { return xbar_.size(); }
  Eigen::Index ny() const { return ybar_.size(); }
  const Polyhedron& graph() const { return graph_; }
  const Polyhedron& A() const { return a_; }
  const Vec& xbar() const { return xbar_; }
  const Vec& ybar() const { return ybar_; }
  PolyNorm norm_x() const { return norm_x_; }
  PolyNorm norm_y() const { return norm_y_; }
  const std::string& name() const { return name_; }
  /// S = F⁻¹(ȳ) ∩ A: graph rows with y fixed at ȳ, then A's rows.
  const Polyhedron& S() const { return s_; }

  /// Same system measured in other norms.
  ConstraintSystem with_norms(PolyNorm norm_x, PolyNorm norm_y) const {
    ConstraintSystem out = *this;
    out.norm_x_ = norm_x;
    out.norm_y_ = norm_y;
    return out;
  }

 private:
  ConstraintSystem(Polyhedron graph, Polyhedron a, Vec xbar, Vec ybar,
                   PolyNorm norm_x, PolyNorm norm_y, std::string name)
      : graph_(std::move(graph)), a_(std::move(a)), xbar_(std::move(xbar)),
        ybar_(std::move(ybar)), norm_x_(norm_x), norm_y_(norm_y),
        name_(std::move(name)),
        s_(intersect(slice_trailing(graph_, ybar_), a_)) {}

  static void check_rows(const Polyhedron& p, const Vec& z, const char* what) {
    for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
      const double r = p.ineq_lhs().row(i).dot(z) - p.ineq_rhs()(i);
      if (r > tol::kLp * row_scale(p.ineq_lhs(), i)) {
        std::ostringstream os;
        os << "xbar not in S: " << what << " inequality row " << i
           << " violated by " << r;
        fail(ErrorCode::kInvalidInstance, os.str());
      }
    }
    for (Eigen::Index i = 0; i < p.num_eq(); ++i) {
      const double r = p.eq_lhs().row(i).dot(z) - p.eq_rhs()(i);
      if (std::abs(r) > tol::kLp * row_scale(p.eq_lhs(), i)) {
        std::ostringstream os;
        os << "xbar not in S: " << what << " equality row " << i
           << " violated by " << r;
        fail(ErrorCode::kInvalidInstance, os.str());
      }
    }
  }

  Polyhedron graph_;
  Polyhedron a_;
  Vec xbar_;
  Vec ybar_;
  PolyNorm norm_x_;
  PolyNorm norm_y_;
  std::string name_;
  Polyhedron s_;
};

/// F(x) as a polyhedron in y; possibly empty.
inline Polyhedron image(const ConstraintSystem& sys, const Vec& x) {
  require_dim(x.size(), sys.nx(), "x dimension");
  return slice_leading(sys.graph(), x);
}

/// d(ȳ, F(x)) + d(x, A), with d(ȳ, ∅) = +∞.
inline double residual(const ConstraintSystem& sys, const Vec& x) {
  auto np = nearest_point(image(sys, x), sys.ybar(), sys.norm_y());
  if (!np) return kInf;
  const double da = sys.A().is_whole_space() ? 0.0 : distance(sys.A(), x, sys.norm_x());
  return np->distance + da;
}

inline const Polyhedron& solution_set(const ConstraintSystem& sys) { return sys.S(); }

inline void require_in_s(const ConstraintSystem& sys, const Vec& x) {
  require_dim(x.size(), sys.nx(), "x dimension");
  if (!contains(sys.S(), x, tol::kActive)) {
    fail(ErrorCode::kNotInSet, "base point is not in the solution set");
  }
}

/// T(gph F, (x, ȳ)) over (u, v).
inline Polyhedron graph_tangent_cone(const ConstraintSystem& sys, const Vec& x) {
  require_in_s(sys, x);
  return tangent_cone(sys.graph(), concat(x, sys.ybar()));
}

/// d(0, DF(x,ȳ)(h)); +∞ when DF(x,ȳ)(h) is empty.
inline double deriv_min_norm(const ConstraintSystem& sys, const Vec& x, const Vec& h) {
  require_dim(h.size(), sys.nx(), "direction dimension");
  const Polyhedron t = graph_tangent_cone(sys, x);
  auto np = nearest_point(slice_leading(t, h), Vec::Zero(sys.ny()), sys.norm_y());
  return np ? np->distance : kInf;
}

/// u ∈ DF⁻¹(ȳ,x)(η₁ B_Y): some v with ‖v‖ <= η₁ and (u, v) ∈ T(gph F).
inline bool inv_deriv_ball_membership(const ConstraintSystem& sys, const Vec& x,
                                      const Vec& u, double eta1) {
  if (!(eta1 >= 0.0)) fail(ErrorCode::kInvalidArgument, "eta1 must be >= 0");
  require_dim(u.size(), sys.nx(), "direction dimension");
  const Polyhedron t = graph_tangent_cone(sys, x);
  return !is_empty(intersect(slice_leading(t, u), unit_ball(sys.norm_y(), sys.ny(), eta1)));
}

/// Generators of {(x*, y*) : (x*, −y*) ∈ N(gph F, (x, ȳ))}.
inline ConeVRep coderiv_cone(const ConstraintSystem& sys, const Vec& x) {
  require_in_s(sys, x);
  ConeVRep n = normal_cone_hrep(sys.graph(), concat(x, sys.ybar()));
  for (auto& r : n.rays) r.tail(sys.ny()) *= -1.0;
  return n;
}

/// Largest r <= 1 such that no row inactive at x̄ becomes active within
/// the r-ball in x. Used to scale the default radius schedule.
inline double local_radius(const ConstraintSystem& sys) {
  double r = 1.0;
  const PolyNorm dual = sys.norm_x().dual();
  auto scan = [&](const Polyhedron& p, const Vec& z, Eigen::Index nx) {
    for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
      const Vec row = p.ineq_lhs().row(i).transpose();
      const double slack = p.ineq_rhs()(i) - row.dot(z);
      const double scale = dual(Vec(row.head(nx))) + row.tail(row.size() - nx).cwiseAbs().sum();
      if (slack > tol::kActive * row_scale(p.ineq_lhs(), i) && scale > 1e-12) {
        r = std::min(r, slack / scale);
      }
    }
  };
  scan(sys.graph(), concat(sys.xbar(), sys.ybar()), sys.nx());
  scan(sys.A(), sys.xbar(), sys.nx());
  return r;
}

}  // namespace subreg

#endif  // SUBREG_CONSTRAINT_SYSTEM_HPP_
