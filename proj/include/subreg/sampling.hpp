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

#ifndef SUBREG_SAMPLING_HPP_
#define SUBREG_SAMPLING_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "subreg/error.hpp"
#include "subreg/norm.hpp"

namespace subreg {

/// Something whose ratio gap(x) / residual(x) is maximized over a ball
/// around center(). gap is d(x, S) or ‖x − x̄‖; residual is the right side
/// of the error bound.
template <class M>
concept RatioModel = requires(const M& m, const Vec& x) {
  { m.dim() } -> std::convertible_to<Eigen::Index>;
  { m.center() } -> std::convertible_to<Vec>;
  { m.norm() } -> std::convertible_to<PolyNorm>;
  { m.gap(x) } -> std::convertible_to<double>;
  { m.residual(x) } -> std::convertible_to<double>;
};

/// Models that can also project onto the zero-gap set.
template <class M>
concept ProjectingModel = RatioModel<M> && requires(const M& m, const Vec& x) {
  { m.project(x) } -> std::convertible_to<std::optional<Vec>>;
};

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ull)));
}

/// Uniform point of the radius-r ball of nm.
inline Vec sample_ball(std::mt19937_64& rng, PolyNorm nm, Eigen::Index n, double r) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec x(n);
  if (nm.kind() == NormKind::kLinf) {
    for (Eigen::Index i = 0; i < n; ++i) x(i) = r * u(rng);
    return x;
  }
  // Dirichlet(1, ..., 1) on n + 1 parts, drop one, attach random signs.
  std::exponential_distribution<double> e(1.0);
  double total = e(rng);
  for (Eigen::Index i = 0; i < n; ++i) total += (x(i) = e(rng));
  for (Eigen::Index i = 0; i < n; ++i) x(i) *= (u(rng) < 0.0 ? -r : r) / total;
  return x;
}

/// Gaps at or below this are treated as zero; the LPs behind gap and
/// residual only resolve membership to about this level.
inline constexpr double kGapFloor = 1e-7;

/// gap / residual with the conventions: zero gap or infinite residual give
/// 0, positive gap over zero residual gives +∞.
inline double ratio_value(double gap, double res) {
  if (!(gap > kGapFloor)) return 0.0;
  if (res == kInf) return 0.0;
  if (!(res > 1e-14)) return kInf;
  return gap / res;
}

struct SampleOptions {
  int n_samples = 20000;
  std::uint64_t seed = 0;
  int refine_top = 8;
  int refine_steps = 60;
  /// 0 picks hardware concurrency.
  unsigned threads = 0;
};

struct SampleResult {
  double value = 0.0;
  Vec argmax;
  int evaluated = 0;
};

namespace detail {

inline constexpr int kBlocks = 64;

struct Candidate {
  double value = 0.0;
  Vec x;
};

inline void keep_top(std::vector<Candidate>& top, Candidate c, int k) {
  top.push_back(std::move(c));
  std::stable_sort(top.begin(), top.end(),
                   [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
  if (static_cast<int>(top.size()) > k) top.resize(static_cast<std::size_t>(k));
}

template <RatioModel M>
double eval(const M& m, const Vec& x) {
  const double g = m.gap(x);
  if (!(g > kGapFloor)) return 0.0;
  return ratio_value(g, m.residual(x));
}

template <RatioModel M>
Vec boundary_point(const M& m, const Vec& x, double delta, std::mt19937_64& rng) {
  if constexpr (ProjectingModel<M>) {
    std::optional<Vec> p = m.project(x);
    if (!p) return x;
    const Vec d = x - *p;
    const double len = m.norm()(d);
    if (!(len > 1e-12)) return x;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double rho = delta * std::pow(10.0, -3.0 * u(rng));
    Vec y = *p + (rho / len) * d;
    return m.norm()(y - m.center()) <= delta ? y : x;
  } else {
    (void)m;
    (void)delta;
    (void)rng;
    return x;
  }
}

}  // namespace detail

/// Sampled sup of gap/residual over the radius-δ ball around the center.
/// Half the points are uniform, half are pushed to within a log-uniform
/// distance of the zero-gap set; the best few are then refined by a
/// random local search. The result depends only on (model, δ, options
/// minus threads).
template <RatioModel M>
SampleResult sample_sup_ratio(const M& m, double delta, const SampleOptions& opt) {
  if (!(delta > 0.0)) fail(ErrorCode::kInvalidArgument, "sampling radius must be > 0");
  if (opt.n_samples < 1) fail(ErrorCode::kInvalidArgument, "n_samples must be >= 1");
  const Eigen::Index n = m.dim();
  const Vec c = m.center();
  const PolyNorm nm = m.norm();

  std::vector<std::vector<detail::Candidate>> tops(detail::kBlocks);
  auto run_block = [&](int b) {
    std::mt19937_64 rng = stream_rng(opt.seed, static_cast<std::uint64_t>(b) + 1);
    const long lo = static_cast<long>(opt.n_samples) * b / detail::kBlocks;
    const long hi = static_cast<long>(opt.n_samples) * (b + 1) / detail::kBlocks;
    auto& top = tops[static_cast<std::size_t>(b)];
    for (long i = lo; i < hi; ++i) {
      Vec x = c + sample_ball(rng, nm, n, delta);
      if (i % 2 == 1) x = detail::boundary_point(m, x, delta, rng);
      const double v = detail::eval(m, x);
      if (v > 0.0 && (static_cast<int>(top.size()) < opt.refine_top || v > top.back().value)) {
        detail::keep_top(top, {v, x}, opt.refine_top);
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, detail::kBlocks);
  if (threads <= 1) {
    for (int b = 0; b < detail::kBlocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int b = static_cast<int>(t); b < detail::kBlocks; b += static_cast<int>(threads)) run_block(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<detail::Candidate> top;
  for (auto& t : tops) {
    for (auto& cand : t) detail::keep_top(top, std::move(cand), opt.refine_top);
  }
  SampleResult out;
  out.evaluated = opt.n_samples;
  out.argmax = c;
  if (top.empty()) return out;
  if (top.front().value == kInf) {
    out.value = kInf;
    out.argmax = top.front().x;
    return out;
  }

  std::mt19937_64 rng = stream_rng(opt.seed, 0);
  for (auto& cand : top) {
    double step = 0.25 * delta;
    for (int k = 0; k < opt.refine_steps && step > 1e-9 * delta; ++k) {
      Vec y = cand.x + sample_ball(rng, nm, n, step);
      if (nm(y - c) > delta) {
        step *= 0.7;
        continue;
      }
      const double v = detail::eval(m, y);
      ++out.evaluated;
      if (v > cand.value) {
        cand = {v, std::move(y)};
        if (v == kInf) break;
      } else {
        step *= 0.7;
      }
    }
    if (cand.value > out.value) {
      out.value = cand.value;
      out.argmax = cand.x;
    }
  }
  return out;
}

}  // namespace subreg

#endif  // SUBREG_SAMPLING_HPP_
