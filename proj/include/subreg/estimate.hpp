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

#ifndef SUBREG_ESTIMATE_HPP_
#define SUBREG_ESTIMATE_HPP_

#include <cstdint>
#include <optional>

#include "subreg/constraint_system.hpp"
#include "subreg/local_geometry.hpp"
#include "subreg/sampling.hpp"

namespace subreg {

/// d(x, S) against the residual of a polyhedral system.
class SystemModel {
 public:
  explicit SystemModel(const ConstraintSystem& sys) : sys_(&sys) {}
  Eigen::Index dim() const { return sys_->nx(); }
  Vec center() const { return sys_->xbar(); }
  PolyNorm norm() const { return sys_->norm_x(); }
  double gap(const Vec& x) const { return distance(sys_->S(), x, sys_->norm_x()); }
  double residual(const Vec& x) const { return subreg::residual(*sys_, x); }
  std::optional<Vec> project(const Vec& x) const {
    auto np = nearest_point(sys_->S(), x, sys_->norm_x());
    if (!np) return std::nullopt;
    return np->point;
  }

 private:
  const ConstraintSystem* sys_;
};

/// ‖x − x̄‖ against the residual; its sup is the strong modulus.
class StrongSystemModel {
 public:
  explicit StrongSystemModel(const ConstraintSystem& sys) : sys_(&sys) {}
  Eigen::Index dim() const { return sys_->nx(); }
  Vec center() const { return sys_->xbar(); }
  PolyNorm norm() const { return sys_->norm_x(); }
  double gap(const Vec& x) const { return sys_->norm_x()(x - sys_->xbar()); }
  double residual(const Vec& x) const { return subreg::residual(*sys_, x); }
  std::optional<Vec> project(const Vec& x) const {
    (void)x;
    return sys_->xbar();
  }

 private:
  const ConstraintSystem* sys_;
};

/// Sampled moduli above kTauCap encode +∞.
inline double cap_modulus(double v) { return v > kTauCap ? kInf : v; }

/// Sampled sup of d(x,S) / residual(x) over B(x̄, δ).
inline double estimate_subreg(const ConstraintSystem& sys, double delta, int n_samples,
                              std::uint64_t seed) {
  SampleOptions opt;
  opt.n_samples = n_samples;
  opt.seed = seed;
  return cap_modulus(sample_sup_ratio(SystemModel(sys), delta, opt).value);
}

/// Sampled sup of ‖x − x̄‖ / residual(x) over B(x̄, δ).
inline double estimate_ssubreg(const ConstraintSystem& sys, double delta, int n_samples,
                               std::uint64_t seed) {
  SampleOptions opt;
  opt.n_samples = n_samples;
  opt.seed = seed;
  return cap_modulus(sample_sup_ratio(StrongSystemModel(sys), delta, opt).value);
}

}  // namespace subreg

#endif  // SUBREG_ESTIMATE_HPP_
