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

#ifndef SUBREG_TESTS_FIXTURES_HPP_
#define SUBREG_TESTS_FIXTURES_HPP_

#include "subreg/constraint_system.hpp"
#include "test_util.hpp"

namespace subreg::testing {

/// graph x − y <= 0, A = ℝ; S = {x <= 0}; every modulus is 1.
inline ConstraintSystem e1() {
  return ConstraintSystem::create(Polyhedron(mat({{1.0, -1.0}}), vec({0.0})), Polyhedron(1),
                                  vec({0.0}), vec({0.0}), PolyNorm::linf(), PolyNorm::linf(), "E1");
}

/// graph x₁ − y <= 0, A = {x₂ <= 0}; S = negative orthant.
inline ConstraintSystem e2() {
  return ConstraintSystem::create(Polyhedron(mat({{1.0, 0.0, -1.0}}), vec({0.0})),
                                  Polyhedron(mat({{0.0, 1.0}}), vec({0.0})), vec({0.0, 0.0}),
                                  vec({0.0}), PolyNorm::linf(), PolyNorm::linf(), "E2");
}

/// graph {x − y <= 0, −x − y <= 0}, A = ℝ; S = {0}.
inline ConstraintSystem e3() {
  return ConstraintSystem::create(Polyhedron(mat({{1.0, -1.0}, {-1.0, -1.0}}), vec({0.0, 0.0})),
                                  Polyhedron(1), vec({0.0}), vec({0.0}), PolyNorm::linf(),
                                  PolyNorm::linf(), "E3");
}

/// F(x) = Y for all x, A = X.
inline ConstraintSystem whole_space_system(Eigen::Index nx = 2, Eigen::Index ny = 1) {
  return ConstraintSystem::create(Polyhedron(nx + ny), Polyhedron(nx), Vec::Zero(nx),
                                  Vec::Zero(ny), PolyNorm::linf(), PolyNorm::linf(), "whole");
}

}  // namespace subreg::testing

#endif  // SUBREG_TESTS_FIXTURES_HPP_
