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

#include "subreg/polyhedron.hpp"
#include "subreg/projection.hpp"
#include "subreg/vrep.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace subreg {
namespace {

using testing::mat;
using testing::vec;

Polyhedron halfline() { return Polyhedron(mat({{1.0}}), vec({0.0})); }
Polyhedron neg_orthant() {
  return Polyhedron(mat({{1.0, 0.0}, {0.0, 1.0}}), vec({0.0, 0.0}));
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(halfline(), vec({0.0})));
  EXPECT_FALSE(contains(halfline(), vec({0.5})));
  EXPECT_TRUE(contains(neg_orthant(), vec({-1.0, -2.0})));
  EXPECT_THROW(contains(halfline(), vec({0.0, 1.0})), Error);
}

TEST(Distance, Examples) {
  EXPECT_NEAR(distance(halfline(), vec({0.7}), PolyNorm::linf()), 0.7, 1e-12);
  EXPECT_NEAR(distance(neg_orthant(), vec({3.0, 1.0}), PolyNorm::linf()), 3.0, 1e-12);
  EXPECT_NEAR(distance(neg_orthant(), vec({3.0, 1.0}), PolyNorm::l1()), 4.0, 1e-12);
  EXPECT_EQ(distance(neg_orthant(), vec({-1.0, -1.0}), PolyNorm::linf()), 0.0);
  try {
    distance(Polyhedron::empty_set(1), vec({0.0}), PolyNorm::linf());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptySet);
  }
}

TEST(TangentCone, Examples) {
  Polyhedron t = tangent_cone(halfline(), vec({0.0}));
  ASSERT_EQ(t.num_ineq(), 1);
  EXPECT_GT(t.ineq_lhs()(0, 0), 0.0);
  EXPECT_EQ(t.ineq_rhs()(0), 0.0);

  EXPECT_TRUE(tangent_cone(halfline(), vec({-1.0})).is_whole_space());

  t = tangent_cone(neg_orthant(), vec({0.0, -1.0}));
  ASSERT_EQ(t.num_ineq(), 1);
  EXPECT_EQ(t.ineq_lhs()(0, 0), 1.0);
  EXPECT_EQ(t.ineq_lhs()(0, 1), 0.0);

  try {
    tangent_cone(halfline(), vec({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInSet);
  }
}

TEST(NormalCone, Examples) {
  ConeVRep n = normal_cone_hrep(halfline(), vec({0.0}));
  ASSERT_EQ(n.rays.size(), 1u);
  EXPECT_EQ(n.rays[0](0), 1.0);
  EXPECT_TRUE(normal_cone_hrep(halfline(), vec({-3.0})).rays.empty());
  n = normal_cone_hrep(neg_orthant(), vec({0.0, 0.0}));
  ASSERT_EQ(n.rays.size(), 2u);
  EXPECT_EQ(n.rays[0], vec({1.0, 0.0}));
  EXPECT_EQ(n.rays[1], vec({0.0, 1.0}));
  EXPECT_THROW(normal_cone_hrep(halfline(), vec({2.0})), Error);
}

TEST(SumMembership, Examples) {
  Polyhedron c = halfline();
  EXPECT_TRUE(sum_membership(vec({-4.0}), c, PolyNorm::linf(), 0.0));
  EXPECT_TRUE(sum_membership(vec({0.5}), c, PolyNorm::linf(), 0.5));
  EXPECT_FALSE(sum_membership(vec({2.0}), c, PolyNorm::linf(), 1.0));
  EXPECT_THROW(sum_membership(vec({2.0, 1.0}), c, PolyNorm::linf(), 1.0), Error);
}

TEST(SupportValue, Examples) {
  Polyhedron seg(mat({{1.0}, {-1.0}}), vec({1.0, 1.0}));
  EXPECT_NEAR(support_value(seg, vec({1.0})), 1.0, 1e-12);
  EXPECT_NEAR(support_value(halfline(), vec({1.0})), 0.0, 1e-12);
  EXPECT_EQ(support_value(halfline(), vec({-1.0})), kInf);
  EXPECT_THROW(support_value(Polyhedron::empty_set(1), vec({1.0})), Error);
}

TEST(EnumerateVrep, Examples) {
  Polyhedron box = unit_ball(PolyNorm::linf(), 2);
  ConeVRep v = enumerate_vrep(box);
  EXPECT_EQ(v.vertices.size(), 4u);
  EXPECT_TRUE(v.rays.empty());

  v = enumerate_vrep(neg_orthant());
  ASSERT_EQ(v.vertices.size(), 1u);
  EXPECT_LE(v.vertices[0].norm(), 1e-12);
  ASSERT_EQ(v.rays.size(), 2u);
  auto has = [&](const Vec& r) {
    for (const auto& x : v.rays) if ((x - r).norm() < 1e-9) return true;
    return false;
  };
  EXPECT_TRUE(has(vec({-1.0, 0.0})));
  EXPECT_TRUE(has(vec({0.0, -1.0})));

  Polyhedron empty(mat({{1.0}, {-1.0}}), vec({0.0, -1.0}));
  EXPECT_TRUE(enumerate_vrep(empty).empty());

  try {
    enumerate_vrep(Polyhedron(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimCap);
  }
}

TEST(EnumerateVrep, HalfspaceReportsLines) {
  Polyhedron h(mat({{1.0, 0.0}}), vec({0.0}));
  ConeVRep v = enumerate_vrep(h);
  ASSERT_EQ(v.vertices.size(), 1u);
  EXPECT_EQ(v.rays.size(), 3u);  // (−1,0) and ±(0,1)
}

TEST(FmProject, ShadowOfTriangle) {
  // Triangle with vertices (0,0), (2,0), (0,1); its shadow on x1 is [0,2].
  Polyhedron tri(mat({{-1.0, 0.0}, {0.0, -1.0}, {1.0, 2.0}}), vec({0.0, 0.0, 2.0}));
  Polyhedron shadow = fm_project(tri, 1);
  EXPECT_TRUE(contains(shadow, vec({0.0})));
  EXPECT_TRUE(contains(shadow, vec({2.0})));
  EXPECT_FALSE(contains(shadow, vec({2.01})));
  EXPECT_FALSE(contains(shadow, vec({-0.01})));
  EXPECT_EQ(shadow.num_ineq(), 2);
}

TEST(FmProject, UsesEqualities) {
  // {(x, y) : y = 2x, 0 <= y <= 1} projects to x ∈ [0, 0.5].
  Polyhedron p(mat({{0.0, -1.0}, {0.0, 1.0}}), vec({0.0, 1.0}),
               mat({{2.0, -1.0}}), vec({0.0}));
  Polyhedron s = fm_project(p, 1);
  EXPECT_TRUE(contains(s, vec({0.5})));
  EXPECT_FALSE(contains(s, vec({0.51})));
  EXPECT_FALSE(contains(s, vec({-0.01})));
}

TEST(FmProject, DetectsEmptiness) {
  Polyhedron p(mat({{0.0, 1.0}, {0.0, -1.0}}), vec({-1.0, 0.0}));
  EXPECT_TRUE(is_empty(fm_project(p, 1)));
}

// Membership in the projection decided independently: fix the kept
// coordinates and test feasibility of the rest.
bool in_projection(const Polyhedron& p, const Vec& x) {
  Polyhedron fiber = slice_leading(p, x);
  return !is_empty(fiber);
}

TEST(FmProjectProperty, AgreesWithFiberFeasibility) {
  std::mt19937_64 rng(3);
  int disagreements = 0, probes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index d = 3 + static_cast<Eigen::Index>(rng() % 3);
    const Eigen::Index keep = 1 + static_cast<Eigen::Index>(rng() % 2);
    Polyhedron p = testing::random_polyhedron(rng, d, 4 + static_cast<int>(rng() % 5), 0.3, true);
    if (rng() % 2) p.add_eq(testing::random_vec(rng, d, -1.0, 1.0), 0.0);
    Polyhedron s = fm_project(p, keep);
    for (int k = 0; k < 50; ++k) {
      Vec x = testing::random_vec(rng, keep, -2.5, 2.5);
      const bool a = contains(s, x, 1e-9);
      const bool b = in_projection(p, x);
      ++probes;
      if (a != b) {
        // Accept disagreement only within a hair of the boundary.
        bool near = false;
        for (double eps : {1e-6, -1e-6}) {
          Vec y = x;
          y.array() += eps;
          near = near || (contains(s, y, 1e-9) != a);
        }
        if (!near) ++disagreements;
      }
    }
  }
  EXPECT_EQ(disagreements, 0) << "of " << probes;
}

TEST(PolyhedraProperty, ConeHomogeneity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Polyhedron p = testing::random_polyhedron(rng, 3, 5, 0.6);
    Polyhedron c = tangent_cone(p, Vec::Zero(3));
    Vec h = testing::random_vec(rng, 3, -1.0, 1.0);
    const double lambda = 0.1 + 5.0 * std::uniform_real_distribution<double>(0, 1)(rng);
    for (PolyNorm nm : {PolyNorm::linf(), PolyNorm::l1()}) {
      const double a = distance(c, lambda * h, nm);
      const double b = lambda * distance(c, h, nm);
      EXPECT_NEAR(a, b, 1e-6);
    }
  }
}

TEST(PolyhedraProperty, TranslatedSetLiesInTangentCone) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Polyhedron p = testing::random_polyhedron(rng, 3, 6, 0.5, true);
    // Base point: nearest point of a random far point, usually on a face.
    Vec far = testing::random_vec(rng, 3, -4.0, 4.0);
    Vec x = nearest_point(p, far, PolyNorm::linf())->point;
    Polyhedron t = tangent_cone(p, x);
    for (int k = 0; k < 40; ++k) {
      Vec q = testing::random_vec(rng, 3, -2.0, 2.0);
      if (!contains(p, q)) continue;
      EXPECT_TRUE(contains(t, q - x, 1e-6));
    }
  }
}

TEST(PolyhedraProperty, TangentConeAtApexIsIdempotent) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    Polyhedron p = testing::random_polyhedron(rng, 3, 4, 1.0);
    Polyhedron t = tangent_cone(p, Vec::Zero(3));
    ASSERT_EQ(t.num_ineq(), p.num_ineq());
    for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
      const Vec a = p.ineq_lhs().row(i).transpose();
      const Vec b = t.ineq_lhs().row(i).transpose();
      EXPECT_NEAR((a / a.cwiseAbs().maxCoeff() - b / b.cwiseAbs().maxCoeff()).norm(), 0.0, 1e-12);
    }
  }
}

TEST(PolyhedraProperty, ZeroDistanceIffContained) {
  std::mt19937_64 rng(31);
  int count = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(rng() % 3);
    Polyhedron p = testing::random_polyhedron(rng, d, 1 + static_cast<int>(rng() % 5), 0.3);
    Vec x = testing::random_vec(rng, d, -1.5, 1.5);
    const double dist = distance(p, x, PolyNorm::linf());
    EXPECT_EQ(dist <= tol::kLp, contains(p, x, tol::kLp)) << "trial " << trial;
    count += dist == 0.0;
  }
  EXPECT_GT(count, 50);
}

TEST(PolyhedraProperty, VrepRoundTrip) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(trial % 3);
    const bool bounded = trial % 2 == 0;
    Polyhedron p = testing::random_polyhedron(rng, d, 2 + static_cast<int>(rng() % 4), 0.3, bounded);
    ConeVRep v = enumerate_vrep(p);
    ASSERT_FALSE(v.empty());
    for (const auto& x : v.vertices) EXPECT_TRUE(contains(p, x, 1e-7));
    Polyhedron back = hull_hrep(v, d);
    int probes = 0;
    while (probes < 1000 / 30 + 1) {
      Vec x = testing::random_vec(rng, d, -3.0, 3.0);
      // Skip probes within 1e-6 of a facet of p.
      bool near = false;
      for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
        const double s = (p.ineq_lhs().row(i).dot(x) - p.ineq_rhs()(i)) / row_scale(p.ineq_lhs(), i);
        near = near || std::abs(s) < 1e-6;
      }
      if (near) continue;
      ++probes;
      EXPECT_EQ(contains(p, x, 1e-9), contains(back, x, 1e-7)) << "trial " << trial;
    }
  }
}

TEST(PolyhedraProperty, GeneratorsStayInside) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(rng() % 3);
    Polyhedron p = testing::random_polyhedron(rng, d, 3 + static_cast<int>(rng() % 4), 0.4, trial % 2 == 0);
    ConeVRep v = enumerate_vrep(p);
    for (int k = 0; k < 50; ++k) {
      Vec x = Vec::Zero(d);
      double total = 0.0;
      std::vector<double> w(v.vertices.size());
      for (auto& wi : w) total += (wi = u(rng));
      for (std::size_t i = 0; i < w.size(); ++i) x += (w[i] / total) * v.vertices[i];
      for (const auto& r : v.rays) x += 3.0 * u(rng) * r;
      EXPECT_TRUE(contains(p, x, 1e-7));
    }
  }
}

}  // namespace
}  // namespace subreg
