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

#ifndef SUBREG_TAU_HPP_
#define SUBREG_TAU_HPP_

#include <cstdint>
#include <map>

#include "subreg/base_points.hpp"

namespace subreg {

enum class Mode { kExact, kSampled };

/// d(0, DF(x,ȳ)(h)) from the graph cone; +∞ when the slice is empty.
inline double cone_deriv_min_norm(const LocalCones& lc, const Vec& h) {
  auto np = nearest_point(slice_leading(lc.graph, h), Vec::Zero(lc.ny), lc.norm_y);
  return np ? np->distance : kInf;
}

/// The ratio d(h, T(S,x)) / (d(0, DF(x,ȳ)(h)) + d(h, T(A,x))).
inline double tau_ratio(const LocalCones& lc, const Vec& h) {
  require_dim(h.size(), lc.nx, "direction dimension");
  const double num = distance(lc.s, h, lc.norm_x);
  if (!(num > 1e-12 * std::max(1.0, lc.norm_x(h)))) return 0.0;
  const double den = cone_deriv_min_norm(lc, h) +
                     (lc.a.is_whole_space() ? 0.0 : distance(lc.a, h, lc.norm_x));
  if (den == kInf) return 0.0;
  if (!(den > 1e-14)) return kInf;
  return num / den;
}

/// The ratio above as a sampling model on the unit ball of directions.
class ConeRatioModel {
 public:
  explicit ConeRatioModel(const LocalCones& lc) : lc_(&lc) {}
  Eigen::Index dim() const { return lc_->nx; }
  Vec center() const { return Vec::Zero(lc_->nx); }
  PolyNorm norm() const { return lc_->norm_x; }
  double gap(const Vec& h) const { return distance(lc_->s, h, lc_->norm_x); }
  double residual(const Vec& h) const {
    return cone_deriv_min_norm(*lc_, h) +
           (lc_->a.is_whole_space() ? 0.0 : distance(lc_->a, h, lc_->norm_x));
  }
  std::optional<Vec> project(const Vec& h) const {
    auto np = nearest_point(lc_->s, h, lc_->norm_x);
    if (!np) return std::nullopt;
    return np->point;
  }

 private:
  const LocalCones* lc_;
};

/// Exact sup of the ratio. Writing d(·, T(S,x)) as the max of ⟨g, ·⟩ over
/// the vertices g of N(S,x) ∩ B_{X*}, the sup over {denominator <= 1} is
/// the largest support value of the lifted unit set in those directions.
inline double tau_at_exact(const LocalCones& lc) {
  const std::vector<Vec> gens = normal_ball_generators(lc);
  if (gens.empty()) return 0.0;
  const Polyhedron lifted = lifted_unit_lhs(lc);
  double best = 0.0;
  for (const Vec& g : gens) {
    Vec dir = Vec::Zero(lifted.dim());
    dir.head(lc.nx) = g;
    const double v = support_value(lifted, dir);
    if (!(v <= kTauCap)) return kInf;
    best = std::max(best, v);
  }
  return best;
}

inline double tau_at_sampled(const LocalCones& lc, int n_samples, std::uint64_t seed) {
  SampleOptions opt;
  opt.n_samples = n_samples;
  opt.seed = seed;
  const double v = sample_sup_ratio(ConeRatioModel(lc), 1.0, opt).value;
  return v > kTauCap ? kInf : v;
}

inline double tau_at(const ConstraintSystem& sys, const Vec& x, Mode mode,
                     int n_samples = 4000, std::uint64_t seed = 0) {
  const LocalCones lc = local_cones(sys, x);
  return mode == Mode::kExact ? tau_at_exact(lc) : tau_at_sampled(lc, n_samples, seed);
}

/// Per radius: sup of tau_at over base points of S ∩ B(x̄, δ).
inline DeltaCurve tau_A(const ConstraintSystem& sys, const std::vector<double>& schedule,
                        int base_samples = 4, Mode mode = Mode::kExact,
                        std::uint64_t seed = 0, int n_samples = 4000) {
  check_schedule(schedule);
  std::map<std::vector<Eigen::Index>, double> cache;
  DeltaCurve out;
  for (double delta : schedule) {
    double best = 0.0;
    for (const BasePoint& bp : base_points(sys, delta, base_samples, seed)) {
      auto it = cache.find(bp.signature);
      if (it == cache.end()) {
        it = cache.emplace(bp.signature, tau_at(sys, bp.x, mode, n_samples, seed)).first;
      }
      best = std::max(best, it->second);
    }
    out.delta.push_back(delta);
    out.value.push_back(best);
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_TAU_HPP_
