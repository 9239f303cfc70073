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

#ifndef SUBREG_NORM_HPP_
#define SUBREG_NORM_HPP_

#include <string>
#include <string_view>

#include "subreg/error.hpp"
#include "subreg/linalg.hpp"

namespace subreg {

enum class NormKind { kLinf, kL1 };

/// A polyhedral norm on ℝⁿ. Its unit ball is the box (ℓ∞) or the
/// cross-polytope (ℓ1); the two are dual to each other.
class PolyNorm {
 public:
  constexpr PolyNorm() = default;
  constexpr explicit PolyNorm(NormKind kind) : kind_(kind) {}

  static constexpr PolyNorm linf() { return PolyNorm(NormKind::kLinf); }
  static constexpr PolyNorm l1() { return PolyNorm(NormKind::kL1); }

  static PolyNorm parse(std::string_view name) {
    if (name == "linf") return linf();
    if (name == "l1") return l1();
    fail(ErrorCode::kInvalidArgument,
         "unknown norm '" + std::string(name) + "' (expected linf or l1)");
  }

  constexpr NormKind kind() const { return kind_; }
  constexpr PolyNorm dual() const {
    return kind_ == NormKind::kLinf ? l1() : linf();
  }
  std::string_view name() const {
    return kind_ == NormKind::kLinf ? "linf" : "l1";
  }

  double operator()(const Vec& v) const {
    if (v.size() == 0) return 0.0;
    return kind_ == NormKind::kLinf ? v.cwiseAbs().maxCoeff()
                                    : v.cwiseAbs().sum();
  }

  /// Rows a with ‖z‖ = max_a a·z, i.e. the vertices of the dual unit ball.
  /// ‖z‖ <= r is then the finite system a·z <= r.
  Mat dual_ball_vertices(Eigen::Index n) const {
    if (kind_ == NormKind::kLinf) {
      Mat out(2 * n, n);
      out.setZero();
      for (Eigen::Index i = 0; i < n; ++i) {
        out(2 * i, i) = 1.0;
        out(2 * i + 1, i) = -1.0;
      }
      return out;
    }
    if (n > 20) {
      fail(ErrorCode::kDimCap, "l1 facet description limited to n <= 20");
    }
    const Eigen::Index count = Eigen::Index{1} << n;
    Mat out(count, n);
    for (Eigen::Index mask = 0; mask < count; ++mask) {
      for (Eigen::Index i = 0; i < n; ++i) {
        out(mask, i) = (mask >> i) & 1 ? -1.0 : 1.0;
      }
    }
    return out;
  }

  /// Vertices of the unit ball itself.
  Mat ball_vertices(Eigen::Index n) const { return dual().dual_ball_vertices(n); }

  friend constexpr bool operator==(PolyNorm a, PolyNorm b) {
    return a.kind_ == b.kind_;
  }

 private:
  NormKind kind_ = NormKind::kLinf;
};

}  // namespace subreg

#endif  // SUBREG_NORM_HPP_
