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

#ifndef SUBREG_LINALG_HPP_
#define SUBREG_LINALG_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "subreg/error.hpp"

namespace subreg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

namespace tol {
/// Feasibility and optimality tolerance of the simplex method.
inline constexpr double kLp = 1e-9;
/// Row activity threshold for tangent and normal cones.
inline constexpr double kActive = 1e-7;
/// Pivot magnitude below which a tableau entry is treated as zero.
inline constexpr double kPivot = 1e-11;
}  // namespace tol

inline bool all_finite(const Mat& m) { return m.allFinite(); }
inline bool all_finite(const Vec& v) { return v.allFinite(); }

inline Vec concat(const Vec& a, const Vec& b) {
  Vec out(a.size() + b.size());
  out << a, b;
  return out;
}

inline Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Mat out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

inline Vec vstack(const Vec& a, const Vec& b) { return concat(a, b); }

inline void require_dim(Eigen::Index got, Eigen::Index want,
                        const char* what) {
  if (got != want) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": expected " + std::to_string(want) +
             ", got " + std::to_string(got));
  }
}

/// Orthonormal basis (as columns) of the null space of `m`, with `cols`
/// columns when `m` has no rows.
inline Mat null_space(const Mat& m, Eigen::Index cols, double rel_tol = 1e-10) {
  if (m.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * std::max(1.0, smax)) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

inline Eigen::Index matrix_rank(const Mat& m, double rel_tol = 1e-10) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.cols() - null_space(m, m.cols(), rel_tol).cols();
}

}  // namespace subreg

#endif  // SUBREG_LINALG_HPP_
