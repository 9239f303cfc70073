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

#ifndef SUBREG_GENERATE_HPP_
#define SUBREG_GENERATE_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "subreg/instance_io.hpp"
#include "subreg/sampling.hpp"

namespace subreg {

struct GenerateOptions {
  /// Every right-hand side zero, so S and the graph are cones.
  bool conic = false;
};

/// Random instance with (x̄, ȳ) = (0, 0) feasible for every row: `rows`
/// graph rows and rows/2 rows of A with entries in [−2, 2], rhs lifted to
/// max(rhs, 0) plus a slack drawn from {0, 0.3}.
inline InstanceFile generate(Eigen::Index nx, Eigen::Index ny, int rows, std::uint64_t seed,
                             const GenerateOptions& opt = {}) {
  if (nx < 1 || ny < 1) fail(ErrorCode::kInvalidArgument, "nx and ny must be >= 1");
  if (rows < 1) fail(ErrorCode::kInvalidArgument, "rows must be >= 1");
  std::mt19937_64 rng = stream_rng(seed, 0x6E4);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::bernoulli_distribution coin(0.5);
  auto fill = [&](Eigen::Index r, Eigen::Index c, Mat& g, Vec& b) {
    g.resize(r, c);
    b.resize(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index k = 0; k < c; ++k) g(i, k) = entry(rng);
      const double raw = entry(rng);
      const double slack = coin(rng) ? 0.3 : 0.0;
      b(i) = opt.conic ? 0.0 : std::max(raw, 0.0) + slack;
    }
  };
  InstanceFile f;
  f.name = "random_" + std::to_string(nx) + "x" + std::to_string(ny) + "_r" +
           std::to_string(rows) + "_s" + std::to_string(seed);
  f.nx = nx;
  f.ny = ny;
  fill(rows, nx + ny, f.graph_ineq, f.graph_rhs);
  fill(rows / 2, nx, f.A_ineq, f.A_rhs);
  f.graph_eq = Mat(0, nx + ny);
  f.graph_eq_rhs = Vec(0);
  f.A_eq = Mat(0, nx);
  f.A_eq_rhs = Vec(0);
  f.xbar = Vec::Zero(nx);
  f.ybar = Vec::Zero(ny);
  f.norm = "linf";
  return f;
}

}  // namespace subreg

#endif  // SUBREG_GENERATE_HPP_
