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

#ifndef SUBREG_ANALYZE_HPP_
#define SUBREG_ANALYZE_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "subreg/bcq.hpp"
#include "subreg/estimate.hpp"
#include "subreg/eta.hpp"
#include "subreg/strong.hpp"
#include "subreg/tau.hpp"

namespace subreg {

enum class Method { kExact, kSampled, kUnavailable };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kSampled: return "sampled";
    case Method::kUnavailable: return "unavailable";
  }
  return "?";
}

struct AnalysisConfig {
  /// Used as given when set; otherwise the default schedule scaled by the
  /// local radius of the instance.
  std::optional<std::vector<double>> delta_schedule;
  int n_samples = 20000;
  std::uint64_t seed = 0;
  Mode mode = Mode::kExact;
  int base_samples = 4;
  double tol_bisect = kTolBisect;
  /// Directions per base point for the sampled tau.
  int tau_samples = 4000;
  /// Overrides both norms of the instance.
  std::optional<PolyNorm> norm;
};

struct ModulusReport {
  std::string name;
  std::string norm;
  std::uint64_t seed = 0;
  int n_samples = 0;
  std::vector<double> delta_schedule;
  double subreg_est = 0.0;
  double eta = 0.0;
  double tau = 0.0;
  double bcq_tau = 0.0;
  std::vector<double> subreg_curve;
  std::vector<double> eta_curve;
  std::vector<double> tau_curve;
  std::vector<double> bcq_curve;
  Method subreg_method = Method::kSampled;
  Method eta_method = Method::kExact;
  Method tau_method = Method::kExact;
  Method bcq_method = Method::kExact;
  /// η reached kEtaCap: no finite sup.
  bool degenerate = false;
  double chain_residual = 0.0;
};

struct StrongReport {
  double ssubreg_est = 0.0;
  std::vector<double> ssubreg_curve;
  double eta_strong = 0.0;
  Method eta_strong_method = Method::kExact;
  bool kernel_trivial = false;
  bool singleton = false;
};

struct Analysis {
  ModulusReport modulus;
  StrongReport strong;
  ConicalCase conical;
};

/// 1/v on [0, +∞] with 1/0 clamped to kEtaCap and 1/∞ = 0.
inline double reciprocal(double v) {
  if (std::isnan(v)) return v;
  if (v == kInf) return 0.0;
  if (!(v > 1.0 / kEtaCap)) return kEtaCap;
  return 1.0 / v;
}

/// Largest pairwise gap among the available members of
/// {1/subreg_est, eta, 1/tau, 1/bcq_tau}, relative once values exceed 1.
inline double chain_residual(const ModulusReport& r) {
  std::vector<double> v;
  for (double x : {reciprocal(r.subreg_est), std::min(r.eta, kEtaCap), reciprocal(r.tau),
                   reciprocal(r.bcq_tau)}) {
    if (!std::isnan(x)) v.push_back(x);
  }
  double out = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double scale = std::max({1.0, std::abs(v[i]), std::abs(v[j])});
      out = std::max(out, std::abs(v[i] - v[j]) / scale);
    }
  }
  return out;
}

inline Analysis analyze(const ConstraintSystem& input, const AnalysisConfig& cfg = {}) {
  const ConstraintSystem sys = cfg.norm ? input.with_norms(*cfg.norm, *cfg.norm) : input;
  const std::vector<double> schedule =
      cfg.delta_schedule ? *cfg.delta_schedule : default_schedule(sys);
  check_schedule(schedule);
  if (cfg.n_samples < 1) fail(ErrorCode::kInvalidArgument, "n_samples must be >= 1");

  Analysis out;
  ModulusReport& m = out.modulus;
  m.name = sys.name();
  m.norm = std::string(sys.norm_x().name());
  m.seed = cfg.seed;
  m.n_samples = cfg.n_samples;
  m.delta_schedule = schedule;

  StrongReport& st = out.strong;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    m.subreg_curve.push_back(estimate_subreg(sys, schedule[i], cfg.n_samples, cfg.seed + i));
    st.ssubreg_curve.push_back(
        estimate_ssubreg(sys, schedule[i], cfg.n_samples, cfg.seed + 1000 + i));
  }
  m.subreg_est = m.subreg_curve.back();
  st.ssubreg_est = st.ssubreg_curve.back();

  bool exact = cfg.mode == Mode::kExact;
  if (exact) {
    try {
      const EtaCurve eta = eta_A(sys, schedule, cfg.tol_bisect, reciprocal(m.subreg_est),
                                 cfg.base_samples, cfg.seed);
      m.eta_curve = eta.curve.value;
      m.degenerate = eta.degenerate;
      m.tau_curve = tau_A(sys, schedule, cfg.base_samples, Mode::kExact, cfg.seed).value;
      m.bcq_curve = bcq_inf(sys, schedule, cfg.base_samples, cfg.seed).value;
      const BisectResult es = eta_strong(sys, cfg.tol_bisect);
      st.eta_strong = es.value;
      out.conical = conical_case(sys, cfg.tol_bisect);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDimCap) throw;
      exact = false;
    }
  }
  if (!exact) {
    m.eta_method = m.bcq_method = st.eta_strong_method = Method::kUnavailable;
    m.tau_method = Method::kSampled;
    m.eta_curve.assign(schedule.size(), kNaN);
    m.bcq_curve.assign(schedule.size(), kNaN);
    m.tau_curve =
        tau_A(sys, schedule, cfg.base_samples, Mode::kSampled, cfg.seed, cfg.tau_samples).value;
    st.eta_strong = kNaN;
    out.conical = ConicalCase{};
    out.conical.eta_at_xbar = kNaN;
  }
  m.eta = m.eta_curve.back();
  m.tau = m.tau_curve.back();
  m.bcq_tau = m.bcq_curve.back();
  m.chain_residual = chain_residual(m);

  st.kernel_trivial = kernel_condition(sys);
  st.singleton = is_singleton(sys);
  return out;
}

}  // namespace subreg

#endif  // SUBREG_ANALYZE_HPP_
