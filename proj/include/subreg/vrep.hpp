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

#ifndef SUBREG_VREP_HPP_
#define SUBREG_VREP_HPP_

#include <vector>

#include "subreg/linalg.hpp"
#include "subreg/polyhedron.hpp"
#include "subreg/projection.hpp"

namespace subreg {

/// Largest dimension handled by explicit vertex/ray enumeration.
inline constexpr Eigen::Index kVrepDimCap = 6;

namespace detail {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline void push_unique(std::vector<Vec>& out, const Vec& v, double tol) {
  for (const auto& o : out) {
    if ((o - v).cwiseAbs().maxCoeff() <= tol * (1.0 + o.cwiseAbs().maxCoeff())) return;
  }
  out.push_back(v);
}

inline bool satisfies_rows(const Mat& g, const Vec& b, const Vec& x, double tol) {
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (g.row(i).dot(x) - b(i) > tol * row_scale(g, i) * (1.0 + x.cwiseAbs().maxCoeff())) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Complete list of vertices and extreme rays of P (lines reported as ± rays)
/// by basis enumeration on the pointed part P ∩ lin(P)^⊥.
inline ConeVRep enumerate_vrep(const Polyhedron& p,
                               Eigen::Index dim_cap = kVrepDimCap) {
  const Eigen::Index d = p.dim();
  if (d > dim_cap) {
    fail(ErrorCode::kDimCap, "vertex enumeration limited to dimension " +
                                 std::to_string(dim_cap));
  }
  ConeVRep out;
  if (is_empty(p)) return out;

  const Mat m = vstack(p.ineq_lhs(), p.eq_lhs());
  const Mat lineality = null_space(m, d);
  Mat eq_all = vstack(p.eq_lhs(), Mat(lineality.transpose()));
  Vec eq_rhs_all = vstack(p.eq_rhs(), Vec(Vec::Zero(lineality.cols())));

  // Keep an independent subset of the equalities.
  Mat eq(0, d);
  Vec eq_rhs(0);
  for (Eigen::Index i = 0; i < eq_all.rows(); ++i) {
    Mat trial = vstack(eq, Mat(eq_all.row(i)));
    if (matrix_rank(trial) > eq.rows()) {
      eq = trial;
      eq_rhs.conservativeResize(eq_rhs.size() + 1);
      eq_rhs(eq_rhs.size() - 1) = eq_rhs_all(i);
    }
  }
  const int re = static_cast<int>(eq.rows());
  const int k = static_cast<int>(d) - re;
  const int rows = static_cast<int>(p.num_ineq());
  if (detail::binomial(rows, k) > 4e6) {
    fail(ErrorCode::kDimCap, "too many candidate bases for enumeration");
  }
  const Mat& g = p.ineq_lhs();
  const Vec& gb = p.ineq_rhs();

  Mat sys(d, d);
  Vec rhs(d);
  if (re > 0) {
    sys.topRows(re) = eq;
    rhs.head(re) = eq_rhs;
  }
  detail::for_each_subset(rows, k, [&](const std::vector<int>& idx) {
    for (int t = 0; t < k; ++t) {
      sys.row(re + t) = g.row(idx[static_cast<std::size_t>(t)]);
      rhs(re + t) = gb(idx[static_cast<std::size_t>(t)]);
    }
    Eigen::FullPivLU<Mat> lu(sys);
    lu.setThreshold(1e-10);
    if (lu.rank() < d) return;
    Vec x = lu.solve(rhs);
    if (!x.allFinite()) return;
    if (detail::satisfies_rows(g, gb, x, 1e-7)) detail::push_unique(out.vertices, x, 1e-7);
  });

  if (k >= 1) {
    Mat rsys(d - 1, d);
    if (re > 0) rsys.topRows(re) = eq;
    detail::for_each_subset(rows, k - 1, [&](const std::vector<int>& idx) {
      for (int t = 0; t < k - 1; ++t) {
        rsys.row(re + t) = g.row(idx[static_cast<std::size_t>(t)]);
      }
      const Mat ns = null_space(rsys, d);
      if (ns.cols() != 1) return;
      for (double sg : {1.0, -1.0}) {
        Vec r = sg * ns.col(0);
        r /= r.cwiseAbs().maxCoeff();
        if (detail::satisfies_rows(g, Vec::Zero(g.rows()), r, 1e-7)) {
          detail::push_unique(out.rays, r, 1e-7);
        }
      }
    });
  }
  for (Eigen::Index c = 0; c < lineality.cols(); ++c) {
    Vec l = lineality.col(c);
    l /= l.cwiseAbs().maxCoeff();
    out.rays.push_back(l);
    out.rays.push_back(-l);
  }
  return out;
}

/// H-representation of conv(vertices) + cone(rays) in ℝ^dim, obtained by
/// projecting the lifted multiplier system.
inline Polyhedron hull_hrep(const ConeVRep& v, Eigen::Index dim) {
  if (v.vertices.empty()) return Polyhedron::empty_set(dim);
  const auto nv = static_cast<Eigen::Index>(v.vertices.size());
  const auto nr = static_cast<Eigen::Index>(v.rays.size());
  const Eigen::Index n = dim + nv + nr;
  Mat e = Mat::Zero(dim + 1, n);
  Vec eb = Vec::Zero(dim + 1);
  e.topLeftCorner(dim, dim).setIdentity();
  for (Eigen::Index i = 0; i < nv; ++i) {
    e.block(0, dim + i, dim, 1) = -v.vertices[static_cast<std::size_t>(i)];
    e(dim, dim + i) = 1.0;
  }
  for (Eigen::Index i = 0; i < nr; ++i) {
    e.block(0, dim + nv + i, dim, 1) = -v.rays[static_cast<std::size_t>(i)];
  }
  eb(dim) = 1.0;
  Mat g = Mat::Zero(nv + nr, n);
  g.rightCols(nv + nr) = -Mat::Identity(nv + nr, nv + nr);
  Polyhedron lifted(std::move(g), Vec::Zero(nv + nr), std::move(e), std::move(eb));
  return fm_project(lifted, dim);
}

}  // namespace subreg

#endif  // SUBREG_VREP_HPP_
