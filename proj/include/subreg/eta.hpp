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

#ifndef SUBREG_ETA_HPP_
#define SUBREG_ETA_HPP_

#include <cstdint>
#include <map>

#include "subreg/base_points.hpp"

namespace subreg {

/// Decides the inclusion
///   DF⁻¹(ȳ,x)(η₁B_Y) ∩ (T(A,x) + η₂B_X) ⊂ T(S,x) + B_X  for all η₁+η₂ < η
/// at one base point. The union of the left sides over the splits is
/// η·U with U fixed, so U's generators are enumerated once and each query
/// tests them at the scale η − ε_grid.
class EtaChecker {
 public:
  explicit EtaChecker(const LocalCones& lc)
      : target_(lc.s), norm_(lc.norm_x), lhs_(unit_lhs_vrep(lc)) {}

  bool holds(double eta) const {
    if (!(eta > 0.0)) fail(ErrorCode::kInvalidArgument, "eta must be > 0");
    const double scale = eta - kEpsGrid;
    if (scale <= 0.0) return true;
    for (const Vec& r : lhs_.rays) {
      if (!contains(target_, r, tol::kActive)) return false;
    }
    for (const Vec& w : lhs_.vertices) {
      if (!sum_membership(scale * w, target_, norm_, 1.0)) return false;
    }
    return true;
  }

  /// Same inclusion with target B_X (ball around the origin).
  bool holds_in_ball(double eta) const {
    if (!(eta > 0.0)) fail(ErrorCode::kInvalidArgument, "eta must be > 0");
    const double scale = eta - kEpsGrid;
    if (scale <= 0.0) return true;
    if (!lhs_.rays.empty()) return false;
    for (const Vec& w : lhs_.vertices) {
      if (scale * norm_(w) > 1.0 + tol::kLp) return false;
    }
    return true;
  }

  const ConeVRep& lhs() const { return lhs_; }

 private:
  Polyhedron target_;
  PolyNorm norm_;
  ConeVRep lhs_;
};

inline bool eta_holds(const ConstraintSystem& sys, const Vec& x, double eta) {
  return EtaChecker(local_cones(sys, x)).holds(eta);
}

struct BisectResult {
  double value = 0.0;
  bool at_cap = false;
};

/// sup{η > 0 : holds(η)} for a monotone predicate, bracketed from `guess`.
/// Stops when hi − lo <= tol·min(1, hi); 0 when nothing holds, the cap
/// (flagged) when everything up to the cap holds.
template <class Pred>
BisectResult bisect_sup(Pred&& holds, double guess, double tol, double cap = kEtaCap) {
  if (!(tol > 0.0)) fail(ErrorCode::kInvalidArgument, "bisection tolerance must be > 0");
  if (!(guess > 0.0) || !std::isfinite(guess)) guess = 1.0;
  guess = std::clamp(guess, 1e-9, cap);
  double lo, hi;
  if (holds(guess)) {
    lo = guess;
    hi = std::min(2.0 * lo, cap);
    while (lo < cap && holds(hi)) {
      lo = hi;
      hi = std::min(2.0 * hi, cap);
    }
    if (lo >= cap) return {cap, true};
  } else {
    hi = guess;
    lo = 0.5 * hi;
    while (!holds(lo)) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-12) return {0.0, false};
    }
  }
  while (hi - lo > tol * std::min(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), false};
}

struct EtaCurve {
  DeltaCurve curve;
  bool degenerate = false;  // some radius reached the cap
};

/// Per radius: sup η for which the inclusion holds at every base point of
/// S ∩ B(x̄, δ), by bisection seeded at `guess`.
inline EtaCurve eta_A(const ConstraintSystem& sys, const std::vector<double>& schedule,
                      double tol_bisect = kTolBisect, double guess = 1.0,
                      int base_samples = 4, std::uint64_t seed = 0) {
  check_schedule(schedule);
  std::map<std::vector<Eigen::Index>, EtaChecker> cache;
  EtaCurve out;
  for (double delta : schedule) {
    std::vector<const EtaChecker*> checkers;
    for (const BasePoint& bp : base_points(sys, delta, base_samples, seed)) {
      auto it = cache.find(bp.signature);
      if (it == cache.end()) {
        it = cache.emplace(bp.signature, EtaChecker(local_cones(sys, bp.x))).first;
      }
      checkers.push_back(&it->second);
    }
    auto all = [&](double eta) {
      for (const EtaChecker* c : checkers) {
        if (!c->holds(eta)) return false;
      }
      return true;
    };
    const BisectResult r = bisect_sup(all, guess, tol_bisect);
    out.curve.delta.push_back(delta);
    out.curve.value.push_back(r.value);
    out.degenerate = out.degenerate || r.at_cap;
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_ETA_HPP_
