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

#include "subreg/constraint_system.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "subreg/generate.hpp"
#include "subreg/sampling.hpp"

namespace subreg {
namespace {

using testing::e1;
using testing::e2;
using testing::e3;
using testing::mat;
using testing::vec;

TEST(Create, RejectsXbarOutsideS) {
  try {
    ConstraintSystem::create(Polyhedron(mat({{1.0, -1.0}}), vec({0.0})), Polyhedron(1), vec({1.0}),
                             vec({0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInstance);
    EXPECT_NE(std::string(e.what()).find("graph inequality row 0"), std::string::npos);
  }
  try {
    ConstraintSystem::create(Polyhedron(2), Polyhedron(mat({{1.0}, {-1.0}}), vec({1.0, -0.5})),
                             vec({0.0}), vec({0.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("A inequality row 1"), std::string::npos);
  }
  EXPECT_THROW(ConstraintSystem::create(Polyhedron(3), Polyhedron(1), vec({0.0}), vec({0.0})),
               Error);
}

TEST(Image, Examples) {
  Polyhedron f = image(e1(), vec({0.0}));
  EXPECT_TRUE(contains(f, vec({0.0})));
  EXPECT_TRUE(contains(f, vec({5.0})));
  EXPECT_FALSE(contains(f, vec({-0.1})));
  f = image(e1(), vec({-2.0}));
  EXPECT_TRUE(contains(f, vec({-2.0})));
  EXPECT_FALSE(contains(f, vec({-2.1})));

  // y <= −1 and y >= x, evaluated at x = 0. x̄ = −2, ȳ = −1 keeps it valid.
  auto sys = ConstraintSystem::create(Polyhedron(mat({{0.0, 1.0}, {1.0, -1.0}}), vec({-1.0, 0.0})),
                                      Polyhedron(1), vec({-2.0}), vec({-1.0}));
  EXPECT_TRUE(is_empty(image(sys, vec({0.0}))));
  EXPECT_EQ(residual(sys, vec({0.0})), kInf);
}

TEST(Residual, Examples) {
  EXPECT_NEAR(residual(e1(), vec({0.4})), 0.4, 1e-12);
  EXPECT_NEAR(residual(e2(), vec({1.0, 1.0})), 2.0, 1e-12);
  EXPECT_EQ(residual(e2(), vec({-1.0, -3.0})), 0.0);
}

TEST(SolutionSet, Examples) {
  const auto sys1 = e1();
  const Polyhedron& s1 = solution_set(sys1);
  EXPECT_TRUE(contains(s1, vec({-1.0})));
  EXPECT_FALSE(contains(s1, vec({0.1})));
  const auto sys2 = e2();
  const Polyhedron& s2 = solution_set(sys2);
  EXPECT_TRUE(contains(s2, vec({-1.0, -1.0})));
  EXPECT_FALSE(contains(s2, vec({-1.0, 0.1})));
  EXPECT_FALSE(contains(s2, vec({0.1, -1.0})));
  const auto sys3 = e3();
  const Polyhedron& s3 = solution_set(sys3);
  EXPECT_TRUE(contains(s3, vec({0.0})));
  EXPECT_FALSE(contains(s3, vec({1e-6})));
  EXPECT_FALSE(contains(s3, vec({-1e-6})));
}

TEST(DerivMinNorm, Examples) {
  EXPECT_NEAR(deriv_min_norm(e1(), vec({0.0}), vec({1.0})), 1.0, 1e-12);
  EXPECT_NEAR(deriv_min_norm(e1(), vec({0.0}), vec({-1.0})), 0.0, 1e-12);
  EXPECT_NEAR(deriv_min_norm(e3(), vec({0.0}), vec({1.0})), 1.0, 1e-12);
  try {
    deriv_min_norm(e1(), vec({1.0}), vec({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInSet);
  }
}

TEST(DerivMinNorm, EmptyDerivativeIsInfinite) {
  // graph {x = 0} × ℝ.
  Polyhedron g(Mat(0, 2), Vec(0), mat({{1.0, 0.0}}), vec({0.0}));
  auto sys = ConstraintSystem::create(g, Polyhedron(1), vec({0.0}), vec({0.0}));
  EXPECT_EQ(deriv_min_norm(sys, vec({0.0}), vec({1.0})), kInf);
  EXPECT_EQ(deriv_min_norm(sys, vec({0.0}), vec({0.0})), 0.0);
}

TEST(InvDerivBall, Examples) {
  EXPECT_TRUE(inv_deriv_ball_membership(e1(), vec({0.0}), vec({-1.0}), 0.0));
  EXPECT_FALSE(inv_deriv_ball_membership(e1(), vec({0.0}), vec({1.0}), 0.5));
  EXPECT_TRUE(inv_deriv_ball_membership(e1(), vec({0.0}), vec({1.0}), 1.0));
  EXPECT_THROW(inv_deriv_ball_membership(e1(), vec({0.0}), vec({1.0}), -0.1), Error);
}

TEST(CoderivCone, Examples) {
  ConeVRep c = coderiv_cone(e1(), vec({0.0}));
  ASSERT_EQ(c.rays.size(), 1u);
  EXPECT_EQ(c.rays[0], vec({1.0, 1.0}));
  EXPECT_TRUE(coderiv_cone(e1(), vec({-1.0})).rays.empty());
  c = coderiv_cone(e3(), vec({0.0}));
  ASSERT_EQ(c.rays.size(), 2u);
  EXPECT_EQ(c.rays[0], vec({1.0, 1.0}));
  EXPECT_EQ(c.rays[1], vec({-1.0, 1.0}));
}

std::vector<ConstraintSystem> property_systems() {
  std::vector<ConstraintSystem> out = {e1(), e2(), e3()};
  for (int s = 0; s < 12; ++s) {
    out.push_back(generate(1 + s % 3, 1 + s % 2, 2 + s % 5, 500 + static_cast<std::uint64_t>(s))
                      .to_system());
    out.push_back(generate(1 + s % 3, 1 + s % 2, 2 + s % 5, 700 + static_cast<std::uint64_t>(s),
                           GenerateOptions{true})
                      .to_system());
  }
  return out;
}

TEST(ConstraintSystemProperty, ZeroResidualIffInS) {
  int violations = 0, in_s = 0;
  for (const auto& sys : property_systems()) {
    std::mt19937_64 rng(sys.nx() * 31 + static_cast<int>(sys.graph().num_ineq()));
    for (int k = 0; k < 500; ++k) {
      Vec x = sys.xbar() + sample_ball(rng, sys.norm_x(), sys.nx(), 1.0);
      // Half the probes are pulled onto S so both sides get exercised.
      if (k % 2) x = nearest_point(sys.S(), x, sys.norm_x())->point;
      const bool zero = residual(sys, x) <= tol::kLp;
      const bool member = contains(sys.S(), x, 1e-8);
      in_s += member;
      // Points within LP tolerance of the boundary are ambiguous.
      if (zero != member && distance(sys.S(), x, sys.norm_x()) > 1e-7) ++violations;
    }
  }
  EXPECT_EQ(violations, 0);
  EXPECT_GT(in_s, 1000);
}

TEST(ConstraintSystemProperty, DerivativeInverseDuality) {
  int checked = 0;
  for (const auto& sys : property_systems()) {
    const Polyhedron t = graph_tangent_cone(sys, sys.xbar());
    std::mt19937_64 rng(sys.nx() + 7);
    for (int k = 0; k < 40; ++k) {
      const Vec hv = testing::random_vec(rng, sys.nx() + sys.ny(), -1.0, 1.0);
      if (!contains(t, hv)) continue;
      const Vec h = hv.head(sys.nx());
      const Vec v = hv.tail(sys.ny());
      EXPECT_TRUE(inv_deriv_ball_membership(sys, sys.xbar(), h, sys.norm_y()(v) * (1 + 1e-9)));
      EXPECT_LE(deriv_min_norm(sys, sys.xbar(), h), sys.norm_y()(v) + 1e-9);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(ConstraintSystemProperty, FeasibleDirectionsLieInGraphCone) {
  int checked = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& sys : property_systems()) {
    const Polyhedron t = graph_tangent_cone(sys, sys.xbar());
    const Vec z0 = concat(sys.xbar(), sys.ybar());
    std::mt19937_64 rng(sys.ny() + 11);
    for (int k = 0; k < 200; ++k) {
      const Vec uv = testing::random_vec(rng, sys.nx() + sys.ny(), -1.0, 1.0);
      const double step = 1e-3 + u(rng);
      if (!contains(sys.graph(), z0 + step * uv)) continue;
      EXPECT_TRUE(contains(t, uv, 1e-9));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(LocalRadius, Examples) {
  EXPECT_EQ(local_radius(e1()), 1.0);
  auto sys = ConstraintSystem::create(Polyhedron(mat({{1.0, -1.0}, {2.0, 0.0}}), vec({0.0, 0.3})),
                                      Polyhedron(1), vec({0.0}), vec({0.0}));
  EXPECT_NEAR(local_radius(sys), 0.15, 1e-12);
}

}  // namespace
}  // namespace subreg
