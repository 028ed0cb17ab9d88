// Copyright 2026 The ftqc-estimator Authors
//
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

#pragma once

// Closed-form costs of arithmetic and table-lookup subroutines, rotation
// synthesis, and neutral-atom shuttling. lg is log base 2 throughout.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "ftqc/errors.hpp"
#include "ftqc/numeric.hpp"

namespace ftqc {

enum class CountKind { toffoli, t };

struct SubroutineCost {
  CountKind kind = CountKind::toffoli;
  double count = 0;
  std::optional<double> reaction_depth;   ///< sequential non-Clifford layers
  std::optional<double> timestep_depth;   ///< logical timesteps, when known
  double clean_ancillas = 0;
  double dirty_ancillas = 0;

  double t_equivalent() const { return kind == CountKind::t ? count : 4 * count; }
};

// ---------------------------------------------------------------------------
// Adders. Only the asymptotically leading term in n is kept.

enum class AdderMethod {
  ripple_cuccaro,
  ripple_takahashi,
  ripple_gidney,
  carry_lookahead,
  block_lookahead,
  cond_clean,
  runway,
};

struct AdderParams {
  std::int64_t block = 0;   ///< b, block_lookahead only
  std::int64_t runways = 0; ///< r, runway only
  double error = 0;         ///< epsilon, runway only
};

/// Toffoli count, reaction depth and ancillas for an n-bit in-place adder.
/// `count_formula` / `depth_formula` carry the symbolic form; for methods
/// known only up to big-O the numeric fields are empty.
struct AdderCost {
  std::optional<double> toffoli_count;
  std::optional<double> reaction_depth;
  double ancillas = 0;
  std::string count_formula;
  std::string depth_formula;
  std::string ancilla_formula;

  bool symbolic() const { return !toffoli_count.has_value(); }
};

inline AdderCost adder_cost(AdderMethod method, std::int64_t n, const AdderParams& params = {}) {
  require(n >= 1, ErrorKind::domain, "adder bit width must be >= 1");
  const double nn = static_cast<double>(n);
  switch (method) {
    case AdderMethod::ripple_cuccaro:
      return {2 * nn, 2 * nn, 1, "2n", "2n", "1"};
    case AdderMethod::ripple_takahashi:
      return {2 * nn, 2 * nn, 0, "2n", "2n", "0"};
    case AdderMethod::ripple_gidney:
      return {nn, 2 * nn, nn, "n", "2n", "n"};
    case AdderMethod::carry_lookahead:
      return {7 * nn, 4 * lg(nn), 2 * nn, "7n", "4 lg(n)", "2n"};
    case AdderMethod::block_lookahead: {
      const std::int64_t b = params.block;
      require(b >= 1 && b <= n, ErrorKind::domain, "block size must lie in [1, n]");
      const double bb = static_cast<double>(b);
      return {5 * nn - 4 * bb + 8 * nn / bb, 6 * bb + 4 * lg(nn / bb), 2 * nn + 3 * nn / bb,
              "5n - 4b + 8n/b", "6b + 4 lg(n/b)", "2n + 3n/b"};
    }
    case AdderMethod::cond_clean:
      return {std::nullopt, std::nullopt, 0, "O(n log n)", "O(log^2 n)", "0"};
    case AdderMethod::runway: {
      const std::int64_t r = params.runways;
      const double eps = params.error;
      const std::int64_t r_max = std::max<std::int64_t>(
          1, static_cast<std::int64_t>(nn / std::max(1.0, lg(nn))));
      require(r >= 1 && r <= r_max, ErrorKind::domain,
              "runway count must lie in [1, n/lg n] = [1, " + std::to_string(r_max) + "]");
      require(eps > 0 && eps < 1, ErrorKind::domain, "approximation error must lie in (0, 1)");
      const double rr = static_cast<double>(r);
      const double tail = lg(rr * rr / std::pow(eps, 4));
      return {2 * nn + rr * tail, 2 * nn / (rr + 1) + tail, rr * lg(rr / (eps * eps)),
              "2n + r lg(r^2/eps^4)", "2n/(r+1) + lg(r^2/eps^4)", "r lg(r/eps^2)"};
    }
  }
  throw EstimatorError(ErrorKind::domain, "unknown adder method");
}

// ---------------------------------------------------------------------------
// Table lookup

/// Sequential QROM over N entries: N - 1 serial Toffolis, ceil(lg N) clean
/// ancillas.
inline SubroutineCost qrom_cost(std::int64_t entries) {
  require(entries >= 1, ErrorKind::domain, "table size must be >= 1");
  const double n = static_cast<double>(entries);
  SubroutineCost c;
  c.kind = CountKind::toffoli;
  c.count = n - 1;
  c.reaction_depth = n - 1;
  c.clean_ancillas = ceil_lg(static_cast<std::uint64_t>(entries));
  return c;
}

/// QROAM with blocking factor lambda: 8 ceil(N/lambda) + 32 b lambda T gates,
/// b clean and b lambda dirty ancillas.
inline SubroutineCost qroam_cost(std::int64_t entries, std::int64_t bits, std::int64_t lambda) {
  require(entries >= 1 && bits >= 1, ErrorKind::domain, "QROAM needs N >= 1 and b >= 1");
  require(lambda >= 1 && lambda <= entries, ErrorKind::domain, "QROAM needs 1 <= lambda <= N");
  SubroutineCost c;
  c.kind = CountKind::t;
  c.count = 8.0 * static_cast<double>((entries + lambda - 1) / lambda) +
            32.0 * static_cast<double>(bits) * static_cast<double>(lambda);
  c.clean_ancillas = static_cast<double>(bits);
  c.dirty_ancillas = static_cast<double>(bits) * static_cast<double>(lambda);
  return c;
}

struct QroamOptimum {
  std::int64_t lambda = 1;
  SubroutineCost cost;
};

inline constexpr std::int64_t kQroamExhaustiveLimit = std::int64_t{1} << 20;

/// Integer lambda minimizing the QROAM T count; ties go to the smaller lambda.
/// Exhaustive up to N = 2^20. Above that the search is seeded at the
/// continuous optimum sqrt(N / 4b) and restricted to the lambdas that could
/// still beat it, which keeps it exact.
inline QroamOptimum qroam_optimal(std::int64_t entries, std::int64_t bits) {
  require(entries >= 1 && bits >= 1, ErrorKind::domain, "QROAM needs N >= 1 and b >= 1");
  auto t_count = [&](std::int64_t lambda) {
    return 8 * ((entries + lambda - 1) / lambda) + 32 * bits * lambda;
  };
  std::int64_t lo = 1;
  std::int64_t hi = entries;
  if (entries > kQroamExhaustiveLimit) {
    const double seed = std::sqrt(static_cast<double>(entries) / (4.0 * static_cast<double>(bits)));
    const std::int64_t guess =
        std::clamp<std::int64_t>(static_cast<std::int64_t>(std::llround(seed)), 1, entries);
    const std::int64_t bound = t_count(guess);
    // 8N/lambda <= cost and 32 b lambda <= cost for any competitor.
    lo = std::max<std::int64_t>(1, 8 * entries / bound);
    hi = std::min<std::int64_t>(entries, bound / (32 * bits));
  }
  std::int64_t best = lo;
  std::int64_t best_cost = t_count(lo);
  for (std::int64_t lambda = lo + 1; lambda <= hi; ++lambda) {
    const std::int64_t c = t_count(lambda);
    if (c < best_cost) {
      best_cost = c;
      best = lambda;
    }
  }
  return QroamOptimum{best, qroam_cost(entries, bits, best)};
}

// ---------------------------------------------------------------------------
// Rotation synthesis

/// T gates to synthesize one arbitrary-angle rotation to error eps_s:
/// ceil(0.57 lg(1/eps_s) + 8.83).
inline int synthesis_sigma(double eps_s) {
  require(eps_s > 0 && eps_s <= 1, ErrorKind::domain, "synthesis error must lie in (0, 1]");
  return static_cast<int>(std::ceil(0.57 * lg(1.0 / eps_s) + 8.83));
}

// ---------------------------------------------------------------------------
// Neutral-atom shuttling

struct ShuttleParams {
  double acceleration = 5500;     ///< m/s^2
  double site_separation = 12e-6; ///< m
  int patch_distance_sites = 20;  ///< sites across one patch (the code distance)

  void validate() const {
    require(acceleration > 0 && site_separation > 0 && patch_distance_sites > 0,
            ErrorKind::invalid_argument, "shuttle parameters must be positive");
  }

  /// Width of one patch. Taking it as d x site separation is an inference.
  double patch_width() const { return patch_distance_sites * site_separation; }

  /// Corner-to-corner distance across an n x n grid of patches.
  double grid_diagonal(int n) const { return std::sqrt(2.0) * n * patch_width(); }
};

/// Accelerate over the first half, decelerate over the second: t = 2 sqrt(s/a).
inline double shuttle_time(const ShuttleParams& params, double distance) {
  params.validate();
  require(distance >= 0, ErrorKind::invalid_argument, "shuttle distance must be nonnegative");
  return 2.0 * std::sqrt(distance / params.acceleration);
}

/// Distance covered in time t under the same profile: a (t/2)^2.
inline double shuttle_distance(const ShuttleParams& params, double seconds) {
  params.validate();
  return params.acceleration * (seconds / 2) * (seconds / 2);
}

}  // namespace ftqc
