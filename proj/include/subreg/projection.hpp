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

#ifndef SUBREG_PROJECTION_HPP_
#define SUBREG_PROJECTION_HPP_

#include <algorithm>
#include <vector>

#include "subreg/linalg.hpp"
#include "subreg/lp.hpp"
#include "subreg/polyhedron.hpp"

namespace subreg {

namespace detail {

struct Row {
  Vec a;
  double b = 0.0;
};

struct RowSystem {
  std::vector<Row> ineq;
  std::vector<Row> eq;
  bool infeasible = false;
};

inline RowSystem to_rows(const Polyhedron& p) {
  RowSystem s;
  for (Eigen::Index i = 0; i < p.num_ineq(); ++i) {
    s.ineq.push_back({p.ineq_lhs().row(i).transpose(), p.ineq_rhs()(i)});
  }
  for (Eigen::Index i = 0; i < p.num_eq(); ++i) {
    s.eq.push_back({p.eq_lhs().row(i).transpose(), p.eq_rhs()(i)});
  }
  return s;
}

inline Polyhedron from_rows(const RowSystem& s, Eigen::Index dim,
                            Eigen::Index keep) {
  if (s.infeasible) return Polyhedron::empty_set(keep);
  Mat g(static_cast<Eigen::Index>(s.ineq.size()), keep);
  Vec b(static_cast<Eigen::Index>(s.ineq.size()));
  for (std::size_t i = 0; i < s.ineq.size(); ++i) {
    g.row(static_cast<Eigen::Index>(i)) = s.ineq[i].a.head(keep).transpose();
    b(static_cast<Eigen::Index>(i)) = s.ineq[i].b;
  }
  Mat e(static_cast<Eigen::Index>(s.eq.size()), keep);
  Vec eb(static_cast<Eigen::Index>(s.eq.size()));
  for (std::size_t i = 0; i < s.eq.size(); ++i) {
    e.row(static_cast<Eigen::Index>(i)) = s.eq[i].a.head(keep).transpose();
    eb(static_cast<Eigen::Index>(i)) = s.eq[i].b;
  }
  (void)dim;
  return Polyhedron(std::move(g), std::move(b), std::move(e), std::move(eb));
}

// Scales inequality rows to unit max-coefficient and drops trivial ones.
// A row 0·x <= b with b < 0 marks the system infeasible.
inline void normalize(RowSystem& s, const std::vector<Eigen::Index>& live) {
  std::vector<Row> out;
  for (auto& r : s.ineq) {
    double m = 0.0;
    for (auto j : live) m = std::max(m, std::abs(r.a(j)));
    if (m <= 1e-12) {
      if (r.b < -1e-9) s.infeasible = true;
      continue;
    }
    r.a /= m;
    r.b /= m;
    for (auto j : live) {
      if (std::abs(r.a(j)) < 1e-13) r.a(j) = 0.0;
    }
    out.push_back(std::move(r));
  }
  s.ineq = std::move(out);
  std::vector<Row> eqs;
  for (auto& r : s.eq) {
    double m = 0.0;
    for (auto j : live) m = std::max(m, std::abs(r.a(j)));
    if (m <= 1e-12) {
      if (std::abs(r.b) > 1e-9) s.infeasible = true;
      continue;
    }
    r.a /= m;
    r.b /= m;
    eqs.push_back(std::move(r));
  }
  s.eq = std::move(eqs);
}

inline void dedupe(RowSystem& s, const std::vector<Eigen::Index>& live) {
  std::vector<Row> out;
  for (auto& r : s.ineq) {
    bool merged = false;
    for (auto& o : out) {
      double diff = 0.0;
      for (auto j : live) diff = std::max(diff, std::abs(o.a(j) - r.a(j)));
      if (diff <= 1e-10) {
        o.b = std::min(o.b, r.b);
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(r));
  }
  s.ineq = std::move(out);
}

// Removes inequality rows implied by the others: a row is redundant when
// maximizing its left side subject to the remaining rows stays within its rhs.
inline void prune(RowSystem& s, const std::vector<Eigen::Index>& live) {
  normalize(s, live);
  if (s.infeasible) return;
  dedupe(s, live);
  const auto n = static_cast<Eigen::Index>(live.size());
  Mat e(static_cast<Eigen::Index>(s.eq.size()), n);
  Vec eb(static_cast<Eigen::Index>(s.eq.size()));
  for (std::size_t i = 0; i < s.eq.size(); ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      e(static_cast<Eigen::Index>(i), k) = s.eq[i].a(live[k]);
    }
    eb(static_cast<Eigen::Index>(i)) = s.eq[i].b;
  }
  std::vector<bool> keep(s.ineq.size(), true);
  for (std::size_t i = 0; i < s.ineq.size(); ++i) {
    LpProblem lp = LpProblem::over(n);
    lp.sense = Sense::kMaximize;
    for (Eigen::Index k = 0; k < n; ++k) lp.objective(k) = s.ineq[i].a(live[k]);
    Eigen::Index others = 0;
    for (std::size_t j = 0; j < s.ineq.size(); ++j) {
      if (j != i && keep[j]) ++others;
    }
    // Bound the probe row at b + 1 so the LP stays bounded.
    lp.ineq_lhs.resize(others + 1, n);
    lp.ineq_rhs.resize(others + 1);
    Eigen::Index row = 0;
    for (std::size_t j = 0; j < s.ineq.size(); ++j) {
      if (j == i || !keep[j]) continue;
      for (Eigen::Index k = 0; k < n; ++k) lp.ineq_lhs(row, k) = s.ineq[j].a(live[k]);
      lp.ineq_rhs(row) = s.ineq[j].b;
      ++row;
    }
    lp.ineq_lhs.row(row) = lp.objective.transpose();
    lp.ineq_rhs(row) = s.ineq[i].b + 1.0;
    lp.eq_lhs = e;
    lp.eq_rhs = eb;
    LpResult r = lp_solve(lp);
    if (r.status == LpStatus::kInfeasible) {
      s.infeasible = true;
      return;
    }
    if (r.optimal() && *r.value <= s.ineq[i].b + 1e-9 * (1.0 + std::abs(s.ineq[i].b))) {
      keep[i] = false;
    }
  }
  std::vector<Row> out;
  for (std::size_t i = 0; i < s.ineq.size(); ++i) {
    if (keep[i]) out.push_back(std::move(s.ineq[i]));
  }
  s.ineq = std::move(out);
  if (s.ineq.size() <= 1) {
    Mat g(static_cast<Eigen::Index>(s.ineq.size()), n);
    Vec gb(static_cast<Eigen::Index>(s.ineq.size()));
    for (std::size_t i = 0; i < s.ineq.size(); ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        g(static_cast<Eigen::Index>(i), k) = s.ineq[i].a(live[k]);
      }
      gb(static_cast<Eigen::Index>(i)) = s.ineq[i].b;
    }
    if (!lp_feasible(g, gb, e, eb).feasible) s.infeasible = true;
  }
}

inline std::vector<Eigen::Index> iota(Eigen::Index n) {
  std::vector<Eigen::Index> v(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace detail

/// Drops implied inequality rows; an empty input comes back as
/// `Polyhedron::empty_set`.
inline Polyhedron remove_redundant(const Polyhedron& p) {
  auto s = detail::to_rows(p);
  detail::prune(s, detail::iota(p.dim()));
  return detail::from_rows(s, p.dim(), p.dim());
}

/// Projection of P onto its leading `keep` coordinates. Equalities touching
/// eliminated coordinates are used for substitution first; the remaining
/// coordinates go through Fourier–Motzkin with redundancy pruning after every
/// step.
inline Polyhedron fm_project(const Polyhedron& p, Eigen::Index keep) {
  const Eigen::Index d = p.dim();
  if (keep < 0 || keep > d) {
    fail(ErrorCode::kDimensionMismatch, "projection keeps more coordinates than exist");
  }
  auto s = detail::to_rows(p);
  std::vector<Eigen::Index> remaining;
  for (Eigen::Index j = keep; j < d; ++j) {
    // Substitute through the equality with the largest pivot on j.
    int best = -1;
    double best_abs = 1e-10;
    for (std::size_t i = 0; i < s.eq.size(); ++i) {
      const double v = std::abs(s.eq[i].a(j));
      const double scale = std::max(1e-300, s.eq[i].a.cwiseAbs().maxCoeff());
      if (v / scale > best_abs && v > 1e-12) {
        best_abs = v / scale;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      remaining.push_back(j);
      continue;
    }
    detail::Row piv = s.eq[static_cast<std::size_t>(best)];
    s.eq.erase(s.eq.begin() + best);
    auto eliminate = [&](detail::Row& r) {
      const double f = r.a(j) / piv.a(j);
      if (f != 0.0) {
        r.a -= f * piv.a;
        r.b -= f * piv.b;
      }
      r.a(j) = 0.0;
    };
    for (auto& r : s.eq) eliminate(r);
    for (auto& r : s.ineq) eliminate(r);
  }

  auto live_columns = [&]() {
    std::vector<Eigen::Index> live = detail::iota(keep);
    live.insert(live.end(), remaining.begin(), remaining.end());
    return live;
  };

  detail::prune(s, live_columns());
  while (!remaining.empty() && !s.infeasible) {
    // Pick the coordinate generating the fewest combined rows.
    std::size_t pick = 0;
    long best_cost = -1;
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      long pos = 0, neg = 0;
      for (const auto& r : s.ineq) {
        if (r.a(remaining[k]) > 0) ++pos;
        else if (r.a(remaining[k]) < 0) ++neg;
      }
      const long cost = pos * neg - pos - neg;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost < 0 ? 0 : cost;
        pick = k;
        if (cost <= 0) break;
      }
    }
    const Eigen::Index j = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<long>(pick));
    std::vector<detail::Row> pos, neg, next;
    for (auto& r : s.ineq) {
      if (r.a(j) > 0) pos.push_back(std::move(r));
      else if (r.a(j) < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& rp : pos) {
      for (const auto& rn : neg) {
        detail::Row c;
        c.a = rp.a * (-rn.a(j)) + rn.a * rp.a(j);
        c.b = rp.b * (-rn.a(j)) + rn.b * rp.a(j);
        c.a(j) = 0.0;
        next.push_back(std::move(c));
      }
    }
    for (auto& r : next) r.a(j) = 0.0;
    for (auto& r : s.eq) r.a(j) = 0.0;
    s.ineq = std::move(next);
    detail::prune(s, live_columns());
  }
  return detail::from_rows(s, d, keep);
}

/// Reorders coordinates so that new coordinate k is old coordinate order[k].
inline Polyhedron permute_columns(const Polyhedron& p,
                                  const std::vector<Eigen::Index>& order) {
  require_dim(static_cast<Eigen::Index>(order.size()), p.dim(), "permutation length");
  Mat g(p.num_ineq(), p.dim());
  Mat e(p.num_eq(), p.dim());
  for (std::size_t k = 0; k < order.size(); ++k) {
    g.col(static_cast<Eigen::Index>(k)) = p.ineq_lhs().col(order[k]);
    e.col(static_cast<Eigen::Index>(k)) = p.eq_lhs().col(order[k]);
  }
  return Polyhedron(std::move(g), p.ineq_rhs(), std::move(e), p.eq_rhs());
}

}  // namespace subreg

#endif  // SUBREG_PROJECTION_HPP_
