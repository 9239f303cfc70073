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

#ifndef SUBREG_CATALOG_HPP_
#define SUBREG_CATALOG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subreg/analyze.hpp"
#include "subreg/estimate.hpp"
#include "subreg/eta.hpp"
#include "subreg/local_geometry.hpp"
#include "subreg/strong.hpp"
#include "subreg/tau.hpp"

namespace subreg {

/// A one-dimensional system given by closed forms instead of a graph
/// polyhedron: X = Y = ℝ, A = ℝ, x̄ = ȳ = 0, sup norm.
struct CatalogEntry {
  struct Probe {
    double x;
    double residual;
    double distance;
  };

  std::string id;
  std::string description;
  std::string residual_formula;
  std::string distance_formula;
  bool subregular = true;
  std::function<double(double)> residual;
  std::function<double(double)> distance_to_s;
  std::function<double(double)> project;
  /// S = {x̄}.
  bool singleton = false;
  std::array<Probe, 3> probes;
  /// Contingent cones at (x̄, ȳ) when they are polyhedral.
  std::optional<LocalCones> cones;
  /// The graph over (x, y) when F itself is polyhedral.
  std::optional<Polyhedron> graph;
};

/// The entry as a sampling model.
class CatalogModel {
 public:
  explicit CatalogModel(const CatalogEntry& e) : e_(&e) {}
  Eigen::Index dim() const { return 1; }
  Vec center() const { return Vec::Zero(1); }
  PolyNorm norm() const { return PolyNorm::linf(); }
  double gap(const Vec& x) const { return e_->distance_to_s(x(0)); }
  double residual(const Vec& x) const { return e_->residual(x(0)); }
  std::optional<Vec> project(const Vec& x) const {
    Vec p(1);
    p(0) = e_->project(x(0));
    return p;
  }

 private:
  const CatalogEntry* e_;
};

/// |x| against the residual: the strong ratio of an entry.
class CatalogStrongModel {
 public:
  explicit CatalogStrongModel(const CatalogEntry& e) : e_(&e) {}
  Eigen::Index dim() const { return 1; }
  Vec center() const { return Vec::Zero(1); }
  PolyNorm norm() const { return PolyNorm::linf(); }
  double gap(const Vec& x) const { return std::abs(x(0)); }
  double residual(const Vec& x) const { return e_->residual(x(0)); }
  std::optional<Vec> project(const Vec&) const { return Vec(Vec::Zero(1)); }

 private:
  const CatalogEntry* e_;
};

namespace detail {

inline LocalCones line_cones(Mat graph_rows, Mat s_rows) {
  const auto gr = graph_rows.rows();
  const auto sr = s_rows.rows();
  return LocalCones{1, 1, PolyNorm::linf(), PolyNorm::linf(),
                    Polyhedron(std::move(graph_rows), Vec::Zero(gr)), Polyhedron(1),
                    Polyhedron(std::move(s_rows), Vec::Zero(sr))};
}

inline Mat rows(std::initializer_list<std::initializer_list<double>> r) {
  Mat m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index k = 0;
    for (double v : row) m(i, k++) = v;
    ++i;
  }
  return m;
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog() {
  using detail::line_cones;
  using detail::rows;
  std::vector<CatalogEntry> out;

  CatalogEntry parabola;
  parabola.id = "parabola";
  parabola.description = "F(x) = [x^2, inf); S = {0}";
  parabola.residual_formula = "x^2";
  parabola.distance_formula = "|x|";
  parabola.subregular = false;
  parabola.singleton = true;
  parabola.residual = [](double x) { return x * x; };
  parabola.distance_to_s = [](double x) { return std::abs(x); };
  parabola.project = [](double) { return 0.0; };
  parabola.probes = {{{0.5, 0.25, 0.5}, {-2.0, 4.0, 2.0}, {0.0, 0.0, 0.0}}};
  parabola.cones = line_cones(rows({{0.0, -1.0}}), rows({{1.0}, {-1.0}}));
  out.push_back(parabola);

  CatalogEntry halfline;
  halfline.id = "halfline";
  halfline.description = "F(x) = [x, inf); S = (-inf, 0]";
  halfline.residual_formula = "max(x, 0)";
  halfline.distance_formula = "max(x, 0)";
  halfline.residual = [](double x) { return std::max(x, 0.0); };
  halfline.distance_to_s = [](double x) { return std::max(x, 0.0); };
  halfline.project = [](double x) { return std::min(x, 0.0); };
  halfline.probes = {{{0.4, 0.4, 0.4}, {-2.0, 0.0, 0.0}, {1.5, 1.5, 1.5}}};
  halfline.cones = line_cones(rows({{1.0, -1.0}}), rows({{1.0}}));
  halfline.graph = Polyhedron(rows({{1.0, -1.0}}), Vec::Zero(1));
  out.push_back(halfline);

  CatalogEntry vee;
  vee.id = "vee";
  vee.description = "F(x) = [|x|, inf); S = {0}";
  vee.singleton = true;
  vee.residual_formula = "|x|";
  vee.distance_formula = "|x|";
  vee.residual = [](double x) { return std::abs(x); };
  vee.distance_to_s = [](double x) { return std::abs(x); };
  vee.project = [](double) { return 0.0; };
  vee.probes = {{{0.3, 0.3, 0.3}, {-0.7, 0.7, 0.7}, {0.0, 0.0, 0.0}}};
  vee.cones = line_cones(rows({{1.0, -1.0}, {-1.0, -1.0}}), rows({{1.0}, {-1.0}}));
  vee.graph = Polyhedron(rows({{1.0, -1.0}, {-1.0, -1.0}}), Vec::Zero(2));
  out.push_back(vee);

  CatalogEntry tilted;
  tilted.id = "tilted_parabola";
  tilted.description = "F(x) = [x^2 + x, inf); S = [-1, 0]";
  tilted.residual_formula = "max(x^2 + x, 0)";
  tilted.distance_formula = "max(x, 0, -1 - x)";
  tilted.residual = [](double x) { return std::max(x * x + x, 0.0); };
  tilted.distance_to_s = [](double x) { return std::max({x, 0.0, -1.0 - x}); };
  tilted.project = [](double x) { return std::clamp(x, -1.0, 0.0); };
  tilted.probes = {{{0.5, 0.75, 0.5}, {-0.5, 0.0, 0.0}, {-2.0, 2.0, 1.0}}};
  tilted.cones = line_cones(rows({{1.0, -1.0}}), rows({{1.0}}));
  out.push_back(tilted);
  return out;
}

inline std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const auto& e : catalog()) ids.push_back(e.id);
  return ids;
}

inline CatalogEntry catalog_entry(const std::string& id) {
  for (auto& e : catalog()) {
    if (e.id == id) return e;
  }
  fail(ErrorCode::kUnknownCatalogEntry, "unknown catalog entry '" + id + "'");
}

/// The entry as a polyhedral system; only entries with a graph have one.
inline ConstraintSystem catalog_system(const CatalogEntry& e) {
  if (!e.graph) fail(ErrorCode::kNotPolyhedral, "catalog entry '" + e.id + "' is not polyhedral");
  return ConstraintSystem::create(*e.graph, Polyhedron(1), Vec::Zero(1), Vec::Zero(1),
                                  PolyNorm::linf(), PolyNorm::linf(), e.id);
}

inline bool probes_agree(const CatalogEntry& e, double tol = 1e-12) {
  for (const auto& p : e.probes) {
    if (std::abs(e.residual(p.x) - p.residual) > tol) return false;
    if (std::abs(e.distance_to_s(p.x) - p.distance) > tol) return false;
  }
  return true;
}

struct CatalogReport {
  std::string id;
  bool expected_subregular = true;
  std::vector<double> delta_schedule;
  std::vector<double> subreg_curve;
  std::vector<double> ssubreg_curve;
  /// Kernel condition on the entry's cones; unset without cones.
  std::optional<bool> kernel_trivial;
  double tau_sampled = kNaN;
  /// 1/subreg at the smallest radius; 0 once the estimate diverges.
  double eta_sampled = kNaN;
  /// Exact η at the smallest radius; NaN for non-polyhedral entries.
  double eta_exact = kNaN;
  bool probes_ok = false;
  /// Largest over smallest estimate along the schedule is at most 1.1.
  bool stable = false;
  std::uint64_t seed = 0;
  int n_samples = 0;
};

inline std::vector<double> default_catalog_schedule() { return {1e-1, 1e-2, 1e-3}; }

inline CatalogReport run_catalog(const std::string& id, const std::vector<double>& schedule,
                                 int n_samples = 20000, std::uint64_t seed = 0) {
  check_schedule(schedule);
  const CatalogEntry e = catalog_entry(id);
  CatalogReport r;
  r.id = e.id;
  r.expected_subregular = e.subregular;
  r.delta_schedule = schedule;
  r.seed = seed;
  r.n_samples = n_samples;
  r.probes_ok = probes_agree(e);
  SampleOptions opt;
  opt.n_samples = n_samples;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    opt.seed = seed + i;
    r.subreg_curve.push_back(cap_modulus(sample_sup_ratio(CatalogModel(e), schedule[i], opt).value));
    opt.seed = seed + 1000 + i;
    r.ssubreg_curve.push_back(
        cap_modulus(sample_sup_ratio(CatalogStrongModel(e), schedule[i], opt).value));
  }
  const auto [lo, hi] = std::minmax_element(r.subreg_curve.begin(), r.subreg_curve.end());
  r.stable = std::isfinite(*hi) && *lo > 0.0 && *hi <= 1.1 * *lo;
  r.eta_sampled = std::min(reciprocal(r.subreg_curve.back()), kEtaCap);
  if (e.graph) r.eta_exact = eta_A(catalog_system(e), schedule).curve.headline();
  if (e.cones) {
    r.tau_sampled = tau_at_sampled(*e.cones, 4000, seed);
    r.kernel_trivial = kernel_condition(*e.cones);
  }
  return r;
}

}  // namespace subreg

#endif  // SUBREG_CATALOG_HPP_
