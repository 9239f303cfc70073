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

#ifndef SUBREG_POLYHEDRON_HPP_
#define SUBREG_POLYHEDRON_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subreg/error.hpp"
#include "subreg/linalg.hpp"
#include "subreg/lp.hpp"
#include "subreg/norm.hpp"

namespace subreg {

/// H-representation {x : G·x <= g, E·x == e}. No rows means the whole space.
class Polyhedron {
 public:
  Polyhedron() : Polyhedron(0) {}

  explicit Polyhedron(Eigen::Index dim)
      : ineq_lhs_(0, dim), ineq_rhs_(0), eq_lhs_(0, dim), eq_rhs_(0) {}

  Polyhedron(Mat ineq_lhs, Vec ineq_rhs)
      : Polyhedron(std::move(ineq_lhs), std::move(ineq_rhs), Mat(),
                   Vec()) {}

  Polyhedron(Mat ineq_lhs, Vec ineq_rhs, Mat eq_lhs, Vec eq_rhs)
      : ineq_lhs_(std::move(ineq_lhs)),
        ineq_rhs_(std::move(ineq_rhs)),
        eq_lhs_(std::move(eq_lhs)),
        eq_rhs_(std::move(eq_rhs)) {
    if (eq_lhs_.rows() == 0) eq_lhs_.resize(0, ineq_lhs_.cols());
    if (ineq_lhs_.rows() == 0 && ineq_lhs_.cols() != eq_lhs_.cols()) {
      ineq_lhs_.resize(0, eq_lhs_.cols());
    }
    require_dim(eq_lhs_.cols(), ineq_lhs_.cols(), "equality columns");
    require_dim(ineq_rhs_.size(), ineq_lhs_.rows(), "inequality rhs length");
    require_dim(eq_rhs_.size(), eq_lhs_.rows(), "equality rhs length");
    if (!all_finite(ineq_lhs_) || !all_finite(ineq_rhs_) ||
        !all_finite(eq_lhs_) || !all_finite(eq_rhs_)) {
      fail(ErrorCode::kInvalidArgument, "polyhedron data must be finite");
    }
  }

  static Polyhedron whole_space(Eigen::Index dim) { return Polyhedron(dim); }

  /// Canonical empty set: the single row 0·x <= -1.
  static Polyhedron empty_set(Eigen::Index dim) {
    Mat g = Mat::Zero(1, dim);
    Vec b = Vec::Constant(1, -1.0);
    return Polyhedron(std::move(g), std::move(b));
  }

  Eigen::Index dim() const { return ineq_lhs_.cols(); }
  Eigen::Index num_ineq() const { return ineq_lhs_.rows(); }
  Eigen::Index num_eq() const { return eq_lhs_.rows(); }
  bool is_whole_space() const { return num_ineq() == 0 && num_eq() == 0; }

  const Mat& ineq_lhs() const { return ineq_lhs_; }
  const Vec& ineq_rhs() const { return ineq_rhs_; }
  const Mat& eq_lhs() const { return eq_lhs_; }
  const Vec& eq_rhs() const { return eq_rhs_; }

  void add_ineq(const Vec& row, double rhs) {
    require_dim(row.size(), dim(), "inequality row length");
    ineq_lhs_.conservativeResize(num_ineq() + 1, dim());
    ineq_lhs_.row(num_ineq() - 1) = row.transpose();
    ineq_rhs_.conservativeResize(ineq_rhs_.size() + 1);
    ineq_rhs_(ineq_rhs_.size() - 1) = rhs;
  }

  void add_eq(const Vec& row, double rhs) {
    require_dim(row.size(), dim(), "equality row length");
    eq_lhs_.conservativeResize(num_eq() + 1, dim());
    eq_lhs_.row(num_eq() - 1) = row.transpose();
    eq_rhs_.conservativeResize(eq_rhs_.size() + 1);
    eq_rhs_(eq_rhs_.size() - 1) = rhs;
  }

  /// True when every right-hand side vanishes, so the set is a cone.
  bool is_cone(double tol = tol::kLp) const {
    return (ineq_rhs_.size() == 0 || ineq_rhs_.cwiseAbs().maxCoeff() <= tol) &&
           (eq_rhs_.size() == 0 || eq_rhs_.cwiseAbs().maxCoeff() <= tol);
  }

 private:
  Mat ineq_lhs_;
  Vec ineq_rhs_;
  Mat eq_lhs_;
  Vec eq_rhs_;
};

/// Finite generators: conv(vertices) + cone(rays). Lines appear as ± rays.
struct ConeVRep {
  std::vector<Vec> vertices;
  std::vector<Vec> rays;

  bool empty() const { return vertices.empty(); }
};

inline Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  require_dim(b.dim(), a.dim(), "intersect dimension");
  return Polyhedron(vstack(a.ineq_lhs(), b.ineq_lhs()),
                    vstack(a.ineq_rhs(), b.ineq_rhs()),
                    vstack(a.eq_lhs(), b.eq_lhs()),
                    vstack(a.eq_rhs(), b.eq_rhs()));
}

/// {z : ‖z‖ <= radius} in facet form.
inline Polyhedron unit_ball(PolyNorm norm, Eigen::Index n, double radius = 1.0) {
  Mat g = norm.dual_ball_vertices(n);
  Vec b = Vec::Constant(g.rows(), radius);
  return Polyhedron(std::move(g), std::move(b));
}

/// Row scale used to make activity and violation tests unit-free.
inline double row_scale(const Mat& m, Eigen::Index i) {
  const double s = m.cols() > 0 ? m.row(i).cwiseAbs().maxCoeff() : 0.0;
  return s > 1e-12 ? s : 1.0;
}

inline bool contains(const Polyhedron& p, const Vec& x, double tol = tol::kLp) {
  require_dim(x.size(), p.dim(), "point dimension");
  for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
    const double r = p.ineq_lhs().row(i).dot(x) - p.ineq_rhs()(i);
    if (r > tol * row_scale(p.ineq_lhs(), i)) return false;
  }
  for (Eigen::Index i = 0; i < p.num_eq(); ++i) {
    const double r = p.eq_lhs().row(i).dot(x) - p.eq_rhs()(i);
    if (std::abs(r) > tol * row_scale(p.eq_lhs(), i)) return false;
  }
  return true;
}

inline bool is_empty(const Polyhedron& p) {
  if (p.is_whole_space()) return false;
  return !lp_feasible(p.ineq_lhs(), p.ineq_rhs(), p.eq_lhs(), p.eq_rhs())
              .feasible;
}

struct NearestPoint {
  Vec point;
  double distance = 0.0;
};

/// Norm projection of x onto P; empty optional when P is empty.
inline std::optional<NearestPoint> nearest_point(const Polyhedron& p,
                                                 const Vec& x, PolyNorm norm) {
  require_dim(x.size(), p.dim(), "point dimension");
  if (contains(p, x)) return NearestPoint{x, 0.0};
  const Eigen::Index d = p.dim();
  const Mat ball = norm.dual_ball_vertices(d);
  // Variables (p, r): minimize r with a·(x − p) <= r for each dual vertex a.
  LpProblem lp = LpProblem::over(d + 1);
  lp.objective(d) = 1.0;
  lp.ineq_lhs = Mat::Zero(p.num_ineq() + ball.rows(), d + 1);
  lp.ineq_rhs = Vec(p.num_ineq() + ball.rows());
  lp.ineq_lhs.topLeftCorner(p.num_ineq(), d) = p.ineq_lhs();
  lp.ineq_rhs.head(p.num_ineq()) = p.ineq_rhs();
  lp.ineq_lhs.bottomLeftCorner(ball.rows(), d) = -ball;
  lp.ineq_lhs.bottomRightCorner(ball.rows(), 1).setConstant(-1.0);
  lp.ineq_rhs.tail(ball.rows()) = -ball * x;
  lp.eq_lhs = Mat::Zero(p.num_eq(), d + 1);
  lp.eq_lhs.leftCols(d) = p.eq_lhs();
  lp.eq_rhs = p.eq_rhs();
  LpResult r = lp_solve(lp);
  if (r.status == LpStatus::kInfeasible) return std::nullopt;
  if (!r.optimal()) {
    fail(ErrorCode::kInvalidArgument, "distance LP unexpectedly unbounded");
  }
  Vec pt = r.point->head(d);
  return NearestPoint{pt, std::max(0.0, norm(x - pt))};
}

inline double distance(const Polyhedron& p, const Vec& x, PolyNorm norm) {
  auto np = nearest_point(p, x, norm);
  if (!np) fail(ErrorCode::kEmptySet, "distance to an empty polyhedron");
  return np->distance;
}

/// Indices of inequality rows active at x (normalized slack <= tol).
inline std::vector<Eigen::Index> active_rows(const Polyhedron& p, const Vec& x,
                                             double tol = tol::kActive) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
    const double slack = p.ineq_rhs()(i) - p.ineq_lhs().row(i).dot(x);
    if (std::abs(slack) <= tol * row_scale(p.ineq_lhs(), i)) out.push_back(i);
  }
  return out;
}

/// Contingent cone of P at x: active rows homogenized, equalities kept.
inline Polyhedron tangent_cone(const Polyhedron& p, const Vec& x) {
  if (!contains(p, x, tol::kActive)) {
    fail(ErrorCode::kNotInSet, "tangent cone requested at a point outside the set");
  }
  const auto act = active_rows(p, x);
  Mat g(static_cast<Eigen::Index>(act.size()), p.dim());
  for (std::size_t k = 0; k < act.size(); ++k) {
    g.row(static_cast<Eigen::Index>(k)) = p.ineq_lhs().row(act[k]);
  }
  return Polyhedron(std::move(g), Vec::Zero(static_cast<Eigen::Index>(act.size())),
                    p.eq_lhs(), Vec::Zero(p.num_eq()));
}

/// Generators of the normal cone N(P,x): active row normals and ± equality
/// normals. The single vertex is the origin.
inline ConeVRep normal_cone_hrep(const Polyhedron& p, const Vec& x) {
  if (!contains(p, x, tol::kActive)) {
    fail(ErrorCode::kNotInSet, "normal cone requested at a point outside the set");
  }
  ConeVRep out;
  out.vertices.push_back(Vec::Zero(p.dim()));
  for (Eigen::Index i : active_rows(p, x)) {
    out.rays.push_back(p.ineq_lhs().row(i).transpose());
  }
  for (Eigen::Index i = 0; i < p.num_eq(); ++i) {
    out.rays.push_back(p.eq_lhs().row(i).transpose());
    out.rays.push_back(-p.eq_lhs().row(i).transpose());
  }
  return out;
}

/// Decides u ∈ C + r·B for a cone C with one feasibility LP.
inline bool sum_membership(const Vec& u, const Polyhedron& cone, PolyNorm norm,
                           double r) {
  require_dim(u.size(), cone.dim(), "point dimension");
  if (!cone.is_cone()) {
    fail(ErrorCode::kInvalidArgument, "sum_membership expects a cone");
  }
  if (!(r >= 0.0)) fail(ErrorCode::kInvalidArgument, "radius must be >= 0");
  if (contains(cone, u)) return true;
  const Eigen::Index d = cone.dim();
  const Mat ball = norm.dual_ball_vertices(d);
  // t ∈ C and a·(u − t) <= r.
  Mat g(cone.num_ineq() + ball.rows(), d);
  Vec b(cone.num_ineq() + ball.rows());
  g.topRows(cone.num_ineq()) = cone.ineq_lhs();
  b.head(cone.num_ineq()) = cone.ineq_rhs();
  g.bottomRows(ball.rows()) = -ball;
  b.tail(ball.rows()) = Vec::Constant(ball.rows(), r) - ball * u;
  return lp_feasible(g, b, cone.eq_lhs(), cone.eq_rhs()).feasible;
}

/// sup_{p∈P} d·p, +∞ when P recedes along d.
inline double support_value(const Polyhedron& p, const Vec& d) {
  require_dim(d.size(), p.dim(), "direction dimension");
  LpProblem lp = LpProblem::over(p.dim());
  lp.objective = d;
  lp.sense = Sense::kMaximize;
  lp.ineq_lhs = p.ineq_lhs();
  lp.ineq_rhs = p.ineq_rhs();
  lp.eq_lhs = p.eq_lhs();
  lp.eq_rhs = p.eq_rhs();
  LpResult r = lp_solve(lp);
  if (r.status == LpStatus::kInfeasible) {
    fail(ErrorCode::kEmptySet, "support value of an empty polyhedron");
  }
  if (r.status == LpStatus::kUnbounded) return kInf;
  return *r.value;
}

/// {y : (x, y) ∈ P} for P over (x, y) with x of length x.size().
inline Polyhedron slice_leading(const Polyhedron& p, const Vec& x) {
  const Eigen::Index nx = x.size();
  const Eigen::Index ny = p.dim() - nx;
  if (ny < 0) fail(ErrorCode::kDimensionMismatch, "slice point too long");
  return Polyhedron(p.ineq_lhs().rightCols(ny),
                    p.ineq_rhs() - p.ineq_lhs().leftCols(nx) * x,
                    p.eq_lhs().rightCols(ny),
                    p.eq_rhs() - p.eq_lhs().leftCols(nx) * x);
}

/// {x : (x, y) ∈ P} for P over (x, y) with y of length y.size().
inline Polyhedron slice_trailing(const Polyhedron& p, const Vec& y) {
  const Eigen::Index ny = y.size();
  const Eigen::Index nx = p.dim() - ny;
  if (nx < 0) fail(ErrorCode::kDimensionMismatch, "slice point too long");
  return Polyhedron(p.ineq_lhs().leftCols(nx),
                    p.ineq_rhs() - p.ineq_lhs().rightCols(ny) * y,
                    p.eq_lhs().leftCols(nx),
                    p.eq_rhs() - p.eq_lhs().rightCols(ny) * y);
}

}  // namespace subreg

#endif  // SUBREG_POLYHEDRON_HPP_
