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

#ifndef SUBREG_STRONG_HPP_
#define SUBREG_STRONG_HPP_

#include "subreg/eta.hpp"

namespace subreg {

/// DF⁻¹(ȳ,x̄)(η₁B_Y) ∩ (T(A,x̄) + η₂B_X) ⊂ B_X for all η₁ + η₂ < η.
inline bool strong_inclusion_holds(const ConstraintSystem& sys, double eta) {
  return EtaChecker(local_cones(sys, sys.xbar())).holds_in_ball(eta);
}

/// sup η for the strong inclusion; 0 when it never holds.
inline BisectResult eta_strong(const ConstraintSystem& sys, double tol_bisect = kTolBisect) {
  const EtaChecker c(local_cones(sys, sys.xbar()));
  if (!c.lhs().rays.empty()) return {0.0, false};
  return bisect_sup([&](double eta) { return c.holds_in_ball(eta); }, 1.0, tol_bisect);
}

/// DF⁻¹(ȳ,x̄)(0) ∩ T(A,x̄) = {0}: max ±u_i over that cone cut by the unit
/// box is zero for every coordinate.
inline bool kernel_condition(const LocalCones& lc) {
  const Eigen::Index nx = lc.nx;
  Polyhedron k = intersect(slice_trailing(lc.graph, Vec::Zero(lc.ny)), lc.a);
  k = intersect(k, unit_ball(PolyNorm::linf(), nx));
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (double sign : {1.0, -1.0}) {
      if (support_value(k, sign * Vec::Unit(nx, i)) > tol::kActive) return false;
    }
  }
  return true;
}

inline bool kernel_condition(const ConstraintSystem& sys) {
  return kernel_condition(local_cones(sys, sys.xbar()));
}

/// S = {x̄}, by support values along ± coordinate directions.
inline bool is_singleton(const ConstraintSystem& sys) {
  const Polyhedron& s = sys.S();
  for (Eigen::Index i = 0; i < sys.nx(); ++i) {
    for (double sign : {1.0, -1.0}) {
      const Vec d = sign * Vec::Unit(sys.nx(), i);
      if (support_value(s, d) - d.dot(sys.xbar()) > tol::kActive) return false;
    }
  }
  return true;
}

struct ConicalCase {
  /// S − x̄ is a cone: every row inactive at x̄ is implied by T(S, x̄).
  bool applicable = false;
  /// S coincides with x̄ + T(S,x̄) near x̄; always true for polyhedral S.
  bool locally_conical = true;
  /// sup η with the inclusion required only at x̄.
  double eta_at_xbar = 0.0;
  bool at_cap = false;
};

inline ConicalCase conical_case(const ConstraintSystem& sys, double tol_bisect = kTolBisect) {
  ConicalCase out;
  const Polyhedron& s = sys.S();
  const LocalCones lc = local_cones(sys, sys.xbar());
  const auto act = active_rows(s, sys.xbar());
  out.applicable = true;
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < s.num_ineq() && out.applicable; ++i) {
    if (k < act.size() && act[k] == i) {
      ++k;
      continue;
    }
    const Vec a = s.ineq_lhs().row(i).transpose();
    if (support_value(lc.s, a) > tol::kActive * row_scale(s.ineq_lhs(), i)) {
      out.applicable = false;
    }
  }
  const EtaChecker c(lc);
  const BisectResult r = bisect_sup([&](double eta) { return c.holds(eta); }, 1.0, tol_bisect);
  out.eta_at_xbar = r.value;
  out.at_cap = r.at_cap;
  return out;
}

}  // namespace subreg

#endif  // SUBREG_STRONG_HPP_
