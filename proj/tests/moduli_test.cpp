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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "subreg/subreg.hpp"

namespace subreg {
namespace {

using testing::e1;
using testing::e2;
using testing::e3;
using testing::mat;
using testing::vec;

// Mixed random systems: both norms, conic and shifted right-hand sides.
std::vector<ConstraintSystem> random_systems(int count) {
  std::vector<ConstraintSystem> out;
  for (int s = 0; s < count; ++s) {
    const auto seed = 3000 + static_cast<std::uint64_t>(s);
    ConstraintSystem sys =
        generate(1 + s % 3, 1 + (s / 3) % 2, 1 + s % 6, seed, GenerateOptions{s % 4 >= 2})
            .to_system();
    if (s % 2) sys = sys.with_norms(PolyNorm::l1(), PolyNorm::l1());
    out.push_back(sys);
  }
  return out;
}

// sup{η : η·U(1) ⊆ T_S + B} in closed form: rays must lie in T_S, and each
// vertex w caps η at 1/d(w, T_S).
double eta_closed_form(const LocalCones& lc, const ConeVRep& lhs) {
  for (const Vec& r : lhs.rays) {
    if (distance(lc.s, r / lc.norm_x(r), lc.norm_x) > 1e-9) return 0.0;
  }
  double worst = 0.0;
  for (const Vec& w : lhs.vertices) worst = std::max(worst, distance(lc.s, w, lc.norm_x));
  return worst > 0.0 ? 1.0 / worst : kInf;
}

double recomputed_chain(const ModulusReport& r) {
  auto inv = [](double v) { return v == kInf ? 0.0 : (v <= 1e-6 ? 1e6 : 1.0 / v); };
  std::vector<double> v;
  if (!std::isnan(r.subreg_est)) v.push_back(inv(r.subreg_est));
  if (!std::isnan(r.eta)) v.push_back(std::min(r.eta, 1e6));
  if (!std::isnan(r.tau)) v.push_back(inv(r.tau));
  if (!std::isnan(r.bcq_tau)) v.push_back(inv(r.bcq_tau));
  double out = 0.0;
  for (double a : v) {
    for (double b : v) out = std::max(out, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
  }
  return out;
}

TEST(EstimateSubreg, Examples) {
  EXPECT_NEAR(estimate_subreg(e1(), 0.5, 20000, 1), 1.0, 1e-3);
  EXPECT_NEAR(estimate_subreg(e2(), 0.5, 20000, 1), 1.0, 1e-2);
  EXPECT_EQ(estimate_subreg(testing::whole_space_system(), 0.5, 2000, 1), 0.0);
  EXPECT_THROW(estimate_subreg(e1(), 0.0, 100, 1), Error);
  EXPECT_THROW(estimate_subreg(e1(), 0.5, 0, 1), Error);
}

TEST(EstimateSubreg, DeterministicAcrossThreadCounts) {
  const auto sys = generate(3, 2, 6, 41).to_system();
  SampleOptions opt;
  opt.n_samples = 5000;
  opt.seed = 9;
  opt.threads = 1;
  const SampleResult a = sample_sup_ratio(SystemModel(sys), 0.3, opt);
  opt.threads = 3;
  const SampleResult b = sample_sup_ratio(SystemModel(sys), 0.3, opt);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.evaluated, b.evaluated);
}

TEST(TauAt, Examples) {
  for (Mode m : {Mode::kExact, Mode::kSampled}) {
    EXPECT_NEAR(tau_at(e1(), vec({0.0}), m), 1.0, 1e-6);
    EXPECT_NEAR(tau_at(e2(), vec({0.0, 0.0}), m), 1.0, 1e-6);
    EXPECT_EQ(tau_at(testing::whole_space_system(), vec({0.0, 0.0}), m), 0.0);
  }
  try {
    tau_at(e1(), vec({1.0}), Mode::kExact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInSet);
  }
}

TEST(TauAt, DimCapInExactMode) {
  const auto sys = generate(7, 1, 3, 5).to_system();
  try {
    tau_at(sys, sys.xbar(), Mode::kExact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimCap);
  }
  EXPECT_GE(tau_at(sys, sys.xbar(), Mode::kSampled, 500), 0.0);
}

TEST(TauA, Examples) {
  const std::vector<double> sched = {0.5, 0.25, 0.1};
  for (double v : tau_A(e1(), sched).value) EXPECT_NEAR(v, 1.0, 1e-9);
  EXPECT_NEAR(tau_A(e3(), sched).headline(), 1.0, 1e-9);
  EXPECT_EQ(tau_A(e1(), sched).delta, sched);
  EXPECT_THROW(tau_A(e1(), {0.1, 0.5}), Error);
}

TEST(EtaHolds, Examples) {
  EXPECT_TRUE(eta_holds(e1(), vec({0.0}), 0.99));
  EXPECT_FALSE(eta_holds(e1(), vec({0.0}), 1.01));
  EXPECT_THROW(eta_holds(e1(), vec({0.0}), 0.0), Error);
}

TEST(EtaA, Examples) {
  const std::vector<double> sched = {0.5, 0.1};
  EXPECT_NEAR(eta_A(e1(), sched).curve.headline(), 1.0, kTolBisect);
  EXPECT_NEAR(eta_A(e2(), sched).curve.headline(), 1.0, kTolBisect);
  const EtaCurve whole = eta_A(testing::whole_space_system(), sched);
  EXPECT_TRUE(whole.degenerate);
  EXPECT_EQ(whole.curve.headline(), kEtaCap);
}

TEST(EtaA, ParabolaHasNoExactPath) {
  try {
    catalog_system(catalog_entry("parabola"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPolyhedral);
  }
  EXPECT_EQ(run_catalog("parabola", {1e-1, 1e-2}, 5000).eta_sampled, 0.0);
}

TEST(BisectSup, Semantics) {
  const BisectResult r = bisect_sup([](double e) { return e <= 0.3; }, 4.0, 1e-8);
  EXPECT_NEAR(r.value, 0.3, 1e-8);
  EXPECT_FALSE(r.at_cap);
  EXPECT_EQ(bisect_sup([](double) { return false; }, 1.0, 1e-4).value, 0.0);
  const BisectResult cap = bisect_sup([](double) { return true; }, 1.0, 1e-4);
  EXPECT_TRUE(cap.at_cap);
  EXPECT_EQ(cap.value, kEtaCap);
  EXPECT_NEAR(bisect_sup([](double e) { return e <= 2500.0; }, 1e-3, 1e-4).value, 2500.0, 2500.0 * 1e-4);
}

TEST(Bcq, Examples) {
  EXPECT_NEAR(bcq_min_tau(e1(), vec({0.0})), 1.0, 1e-9);
  EXPECT_NEAR(bcq_min_tau(e2(), vec({0.0, 0.0})), 1.0, 1e-9);
  EXPECT_EQ(bcq_min_tau(e1(), vec({-1.0})), 0.0);
  EXPECT_NEAR(bcq_inf(e2(), {0.5, 0.1}).headline(), 1.0, 1e-9);
}

TEST(StrongInclusion, Examples) {
  EXPECT_TRUE(strong_inclusion_holds(e3(), 0.99));
  for (double eta : {0.1, 1.0, 10.0}) EXPECT_FALSE(strong_inclusion_holds(e1(), eta));
  EXPECT_NEAR(eta_strong(e3()).value, 1.0, kTolBisect);
  EXPECT_EQ(eta_strong(e1()).value, 0.0);
}

TEST(KernelCondition, Examples) {
  EXPECT_TRUE(kernel_condition(e3()));
  EXPECT_FALSE(kernel_condition(e1()));
  const auto pinned = ConstraintSystem::create(e1().graph(), Polyhedron(Mat(0, 1), Vec(0), mat({{1.0}}), vec({0.0})),
                                               vec({0.0}), vec({0.0}));
  EXPECT_TRUE(kernel_condition(pinned));
}

TEST(ConicalCase, Examples) {
  ConicalCase c = conical_case(e1());
  EXPECT_TRUE(c.applicable);
  EXPECT_NEAR(c.eta_at_xbar, 1.0, kTolBisect);
  c = conical_case(e3());
  EXPECT_TRUE(c.applicable);
  EXPECT_NEAR(c.eta_at_xbar, 1.0, kTolBisect);
  const auto shifted = ConstraintSystem::create(Polyhedron(mat({{1.0, 0.0, 0.0}}), vec({1.0})),
                                                Polyhedron(2), vec({0.0, 0.0}), vec({0.0}));
  EXPECT_FALSE(conical_case(shifted).applicable);
}

TEST(Lemma21, Examples) {
  const Polyhedron half(mat({{1.0}}), vec({0.0}));
  Lemma21Witness w = lemma21_witness(half, vec({1.0}), 0.9);
  EXPECT_NEAR(w.z(0), 0.0, 1e-12);
  EXPECT_NEAR(w.rhs, 1.0, 1e-12);
  EXPECT_GT(w.margin(), 0.0);
  const Polyhedron orthant(mat({{1.0, 0.0}, {0.0, 1.0}}), vec({0.0, 0.0}));
  w = lemma21_witness(orthant, vec({1.0, 1.0}), 0.5);
  EXPECT_LT((w.z - vec({0.0, 0.0})).norm(), 1e-12);
  w = lemma21_witness(half, vec({1.0}), 1.0 - 1e-9);
  EXPECT_NEAR(w.z(0), 0.0, 1e-12);
  EXPECT_GT(w.margin(), 0.0);
  EXPECT_THROW(lemma21_witness(half, vec({-1.0}), 0.5), Error);
  EXPECT_THROW(lemma21_witness(half, vec({1.0}), 1.0), Error);
}

TEST(Analyze, Examples) {
  AnalysisConfig cfg;
  cfg.seed = 3;
  Analysis a = analyze(e1(), cfg);
  EXPECT_NEAR(a.modulus.subreg_est, 1.0, 1e-3);
  EXPECT_NEAR(a.modulus.eta, 1.0, kTolBisect);
  EXPECT_NEAR(a.modulus.tau, 1.0, 1e-9);
  EXPECT_NEAR(a.modulus.bcq_tau, 1.0, 1e-9);
  EXPECT_LE(a.modulus.chain_residual, 0.05);
  EXPECT_EQ(a.modulus.delta_schedule.size(), 4u);

  a = analyze(e3(), cfg);
  EXPECT_NEAR(a.strong.ssubreg_est, 1.0, 1e-3);
  EXPECT_TRUE(a.strong.kernel_trivial);
  EXPECT_TRUE(a.strong.singleton);

  a = analyze(testing::whole_space_system(), cfg);
  EXPECT_EQ(a.modulus.subreg_est, 0.0);
  EXPECT_EQ(a.modulus.eta, kEtaCap);
  EXPECT_TRUE(a.modulus.degenerate);
  EXPECT_EQ(a.modulus.chain_residual, 0.0);
}

TEST(Analyze, SampledModeMarksExactQuantitiesUnavailable) {
  AnalysisConfig cfg;
  cfg.mode = Mode::kSampled;
  cfg.n_samples = 4000;
  const Analysis a = analyze(e1(), cfg);
  EXPECT_EQ(a.modulus.eta_method, Method::kUnavailable);
  EXPECT_TRUE(std::isnan(a.modulus.eta));
  EXPECT_EQ(a.modulus.tau_method, Method::kSampled);
  EXPECT_NEAR(a.modulus.tau, 1.0, 1e-6);
}

TEST(BasePoints, InsideBallAndSet) {
  for (const auto& sys : random_systems(12)) {
    for (double delta : {0.5, 0.05}) {
      const auto pts = base_points(sys, delta, 6, 1);
      ASSERT_FALSE(pts.empty());
      EXPECT_EQ(pts.front().x, sys.xbar());
      for (const auto& bp : pts) {
        EXPECT_TRUE(contains(sys.S(), bp.x, 1e-7));
        EXPECT_LE(sys.norm_x()(bp.x - sys.xbar()), delta * (1 + 1e-9));
      }
    }
  }
}

// The equality chain at tight bisection tolerance, against closed forms.
TEST(ModuliProperty, ChainEquality) {
  int violations = 0, checked = 0;
  auto systems = random_systems(30);
  for (auto s : {e1(), e2(), e3()}) systems.push_back(s);
  for (const auto& sys : systems) {
    for (const auto& bp : base_points(sys, 0.1, 4, 2)) {
      const LocalCones lc = local_cones(sys, bp.x);
      const EtaChecker checker(lc);
      const double eta = eta_closed_form(lc, checker.lhs());
      const double inv_tau = reciprocal(tau_at_exact(lc));
      const double inv_bcq = reciprocal(bcq_min_tau(lc));
      const double eta_c = std::min(eta, kEtaCap);
      violations += std::abs(eta_c - inv_tau) > 1e-6 * std::max(1.0, eta_c);
      violations += std::abs(eta_c - inv_bcq) > 1e-6 * std::max(1.0, eta_c);
      // Bisection lands on the closed form offset by the grid margin.
      const BisectResult b = bisect_sup([&](double e) { return checker.holds(e); }, 1.0, 1e-8);
      if (eta_c < kEtaCap) violations += std::abs(b.value - eta_c) > kEpsGrid + 2e-8 * std::max(1.0, eta_c);
      ++checked;
    }
  }
  EXPECT_EQ(violations, 0);
  EXPECT_GT(checked, 40);
}

TEST(ModuliProperty, SampledSubregApproachesEta) {
  for (auto sys : {e1(), e2(), e3()}) {
    const double eta = eta_A(sys, {0.1}).curve.headline();
    const double est = estimate_subreg(sys, 0.1, 100000, 4);
    EXPECT_LE(std::abs(1.0 / est - eta), 0.05 * eta) << sys.name();
  }
}

TEST(ModuliProperty, EtaHoldsIsMonotone) {
  int violations = 0;
  for (const auto& sys : random_systems(24)) {
    const EtaChecker c(local_cones(sys, sys.xbar()));
    const double sup = bisect_sup([&](double e) { return c.holds(e); }, 1.0, 1e-6).value;
    if (sup == 0.0 || sup >= kEtaCap) continue;
    for (double f : {0.5, 0.9, 0.999}) {
      const std::array<double, 3> probes = {f * sup, sup / f, sup / (f * f)};
      bool seen_false = false;
      for (double e : probes) {
        const bool h = c.holds(e);
        violations += seen_false && h;
        seen_false = seen_false || !h;
      }
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(ModuliProperty, StrongInclusionImpliesSingleton) {
  int hits = 0;
  auto systems = random_systems(30);
  systems.push_back(e3());
  for (const auto& sys : systems) {
    if (eta_strong(sys).value <= 0.0) continue;
    ++hits;
    const ConeVRep v = enumerate_vrep(sys.S());
    EXPECT_TRUE(v.rays.empty()) << sys.name();
    ASSERT_EQ(v.vertices.size(), 1u) << sys.name();
    EXPECT_LT((v.vertices[0] - sys.xbar()).lpNorm<Eigen::Infinity>(), 1e-9);
  }
  EXPECT_GE(hits, 1);
}

TEST(ModuliProperty, KernelConditionMatchesBoundedStrongModulusOnCatalog) {
  for (const auto& id : catalog_ids()) {
    const CatalogReport r = run_catalog(id, default_catalog_schedule(), 20000, 5);
    ASSERT_TRUE(r.kernel_trivial.has_value());
    const double lo = *std::min_element(r.ssubreg_curve.begin(), r.ssubreg_curve.end());
    const double hi = *std::max_element(r.ssubreg_curve.begin(), r.ssubreg_curve.end());
    const bool bounded = std::isfinite(hi) && hi <= 1.1 * lo;
    EXPECT_EQ(*r.kernel_trivial, bounded) << id;
  }
  EXPECT_TRUE(kernel_condition(e3()));
  EXPECT_NEAR(estimate_ssubreg(e3(), 0.1, 20000, 1), 1.0, 1e-3);
  EXPECT_FALSE(kernel_condition(e1()));
  EXPECT_EQ(estimate_ssubreg(e1(), 0.1, 20000, 1), kInf);
}

TEST(ModuliProperty, TauRatioDegreeZero) {
  int violations = 0;
  std::mt19937_64 rng(17);
  for (const auto& sys : random_systems(20)) {
    const LocalCones lc = local_cones(sys, sys.xbar());
    for (int k = 0; k < 20; ++k) {
      const Vec h = testing::random_vec(rng, sys.nx(), -1.0, 1.0);
      const double r = tau_ratio(lc, h);
      for (double lambda : {0.5, 2.0, 10.0}) {
        const double s = tau_ratio(lc, lambda * h);
        if (std::isinf(r) || std::isinf(s)) {
          violations += r != s;
        } else {
          violations += std::abs(r - s) > 1e-6 * std::max(1.0, r);
        }
      }
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(ModuliProperty, Lemma21RandomCases) {
  std::mt19937_64 rng(23);
  int found = 0;
  for (int k = 0; k < 100; ++k) {
    const auto dim = static_cast<Eigen::Index>(1 + k % 4);
    const Polyhedron omega = testing::random_polyhedron(rng, dim, 2 + k % 5, 0.3, k % 2 == 0);
    Vec x;
    do {
      x = testing::random_vec(rng, dim, -4.0, 4.0);
    } while (contains(omega, x));
    const PolyNorm nm = k % 3 == 0 ? PolyNorm::l1() : PolyNorm::linf();
    const Lemma21Witness w = lemma21_witness(omega, x, 0.99, nm);
    const double lhs = 0.99 * nm(x - w.z);
    const double rhs = distance(tangent_cone(omega, w.z), x - w.z, nm);
    EXPECT_TRUE(contains(omega, w.z, 1e-9));
    EXPECT_GT(rhs - lhs, 1e-9);
    found += rhs - lhs > 1e-9;
  }
  EXPECT_EQ(found, 100);
}

TEST(ModuliProperty, ReportInvariants) {
  AnalysisConfig cfg;
  cfg.n_samples = 3000;
  auto systems = random_systems(16);
  systems.push_back(e3());
  for (const auto& sys : systems) {
    const Analysis a = analyze(sys, cfg);
    const ModulusReport& m = a.modulus;
    for (double v : {m.subreg_est, m.eta, m.tau, m.bcq_tau}) EXPECT_GE(v, 0.0);
    EXPECT_NEAR(recomputed_chain(m), m.chain_residual, 1e-15) << sys.name();
    if (a.strong.eta_strong > 0.0) EXPECT_TRUE(a.strong.singleton) << sys.name();
  }
}

}  // namespace
}  // namespace subreg
