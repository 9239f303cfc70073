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

#ifndef SUBREG_LEMMA21_HPP_
#define SUBREG_LEMMA21_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "subreg/polyhedron.hpp"

namespace subreg {

struct Lemma21Witness {
  Vec z;
  double lhs = 0.0;    // γ‖x − z‖
  double rhs = 0.0;    // d(x − z, T(Ω, z))
  double margin() const { return rhs - lhs; }
};

namespace detail {

inline std::optional<Lemma21Witness> try_witness(const Polyhedron& omega, const Vec& x,
                                                 const Vec& z, double gamma, PolyNorm nm) {
  if (!contains(omega, z, tol::kActive)) return std::nullopt;
  const double lhs = gamma * nm(x - z);
  const double rhs = distance(tangent_cone(omega, z), x - z, nm);
  if (rhs - lhs > 1e-12 * std::max(1.0, nm(x - z))) return Lemma21Witness{z, lhs, rhs};
  return std::nullopt;
}

}  // namespace detail

/// A point z ∈ Ω with γ‖x − z‖ < d(x − z, T(Ω, z)). The norm projection of
/// x already qualifies in exact arithmetic; if rounding spoils it, the
/// projections onto the faces through that point are tried.
inline Lemma21Witness lemma21_witness(const Polyhedron& omega, const Vec& x, double gamma,
                                      PolyNorm nm = PolyNorm::linf()) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    fail(ErrorCode::kInvalidArgument, "gamma must lie in (0, 1)");
  }
  auto np = nearest_point(omega, x, nm);
  if (!np) fail(ErrorCode::kEmptySet, "omega is empty");
  if (contains(omega, x)) fail(ErrorCode::kInvalidArgument, "x lies in omega");
  if (auto w = detail::try_witness(omega, x, np->point, gamma, nm)) return *w;

  // Face walk: every face cut out by a subset of rows near-active at the
  // projection, largest faces first.
  std::vector<Eigen::Index> near = active_rows(omega, np->point, 1e-5);
  if (near.size() > 16) near.resize(16);
  const std::uint32_t total = 1u << near.size();
  std::vector<std::uint32_t> masks(total);
  for (std::uint32_t m = 0; m < total; ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (std::uint32_t m : masks) {
    Polyhedron face = omega;
    for (std::size_t k = 0; k < near.size(); ++k) {
      if (m & (1u << k)) {
        face.add_eq(omega.ineq_lhs().row(near[k]).transpose(), omega.ineq_rhs()(near[k]));
      }
    }
    auto fp = nearest_point(face, x, nm);
    if (!fp) continue;
    if (auto w = detail::try_witness(omega, x, fp->point, gamma, nm)) return *w;
  }
  fail(ErrorCode::kNoWitness, "no witness found on the faces near the projection");
}

}  // namespace subreg

#endif  // SUBREG_LEMMA21_HPP_
