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

// Surface-code logical error model, code-distance selection, patch sizing and
// the logical timing model.

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>

#include "ftqc/errors.hpp"
#include "ftqc/numeric.hpp"

namespace ftqc {

/// Hardware-level inputs. Defaults are the superconducting-like values used
/// throughout: p = 1e-3, threshold 1e-2, prefactor 0.1, 1 us rounds and
/// 1 us reaction time.
struct PhysicalAssumptions {
  double p = 1e-3;          ///< physical error probability per operation
  double p_star = 1e-2;     ///< threshold
  double prefactor = 0.1;   ///< A in p_L = A (p/p*)^((d+1)/2)
  double t_se = 1e-6;       ///< seconds per syndrome-extraction round
  double tau_r = 1e-6;      ///< reaction time, seconds

  void validate() const {
    require(p > 0 && p < p_star && p_star <= 1, ErrorKind::invalid_argument,
            "PhysicalAssumptions requires 0 < p < p_star <= 1");
    require(prefactor > 0, ErrorKind::invalid_argument,
            "PhysicalAssumptions requires prefactor_A > 0");
    require(t_se > 0, ErrorKind::invalid_argument, "PhysicalAssumptions requires t_se > 0");
    require(tau_r > 0, ErrorKind::invalid_argument, "PhysicalAssumptions requires tau_r > 0");
  }

  /// Rounds charged to the volume for one reaction delay: ceil(tau_r / t_se).
  double reaction_rounds() const { return ceil_snap(tau_r / t_se); }
};

inline bool is_valid_distance(int d) { return d >= 3 && d % 2 == 1; }

inline void require_distance(int d) {
  require(is_valid_distance(d), ErrorKind::invalid_distance,
          "code distance must be odd and >= 3, got " + std::to_string(d));
}

/// Logical error probability per patch per syndrome-extraction round.
inline double logical_error_rate(const PhysicalAssumptions& assume, int d) {
  require_distance(d);
  return assume.prefactor * std::pow(assume.p / assume.p_star, 0.5 * (d + 1));
}

/// Physical qubits in one rotated surface-code patch, including ancillas.
inline std::int64_t patch_physical_qubits(int d) {
  require_distance(d);
  return 2 * static_cast<std::int64_t>(d) * d;
}

// ---------------------------------------------------------------------------
// Timing

enum class GateKind : std::size_t {
  cnot = 0,            ///< also CZ and multitarget CNOT/CZ
  s,
  t_teleport,
  auto_corrected_pi8,
  clifford_1q,
};

struct GateDuration {
  int timesteps = 0;  ///< logical timesteps of d rounds each
  int reactions = 0;  ///< reaction delays
};

class GateTimingModel {
 public:
  /// Lattice-surgery durations: CNOT-type 2 timesteps; S 1; T teleport 1 + 1
  /// reaction; auto-corrected pi/8 2 + 1 reaction; generic 1q Clifford 2.
  static GateTimingModel lattice_surgery() {
    GateTimingModel m;
    m.table_ = {GateDuration{2, 0}, GateDuration{1, 0}, GateDuration{1, 1},
                GateDuration{2, 1}, GateDuration{2, 0}};
    return m;
  }

  const GateDuration& operator[](GateKind kind) const {
    return table_[static_cast<std::size_t>(kind)];
  }

  void set(GateKind kind, GateDuration duration) {
    require(duration.timesteps >= 0 && duration.reactions >= 0, ErrorKind::invalid_argument,
            "gate durations must be nonnegative");
    table_[static_cast<std::size_t>(kind)] = duration;
  }

  /// Wall-clock seconds for one gate at distance d.
  double seconds(GateKind kind, int d, const PhysicalAssumptions& assume) const {
    const auto& g = (*this)[kind];
    return g.timesteps * d * assume.t_se + g.reactions * assume.tau_r;
  }

 private:
  std::array<GateDuration, 5> table_{};
};

// ---------------------------------------------------------------------------
// Volume and time

/// Protected logical footprint integrated over the computation.
struct LogicalVolume {
  double patches = 0;    ///< includes routing, excludes factory interiors
  double rounds = 0;     ///< syndrome-extraction depth
  double reactions = 0;  ///< reaction-delay depth

  /// patches x (rounds + reactions * ceil(tau_r / t_se)), in patch-rounds.
  double patch_rounds(const PhysicalAssumptions& assume) const {
    return patches * (rounds + reactions * assume.reaction_rounds());
  }
};

inline double wall_time(const LogicalVolume& vol, const PhysicalAssumptions& assume) {
  return vol.rounds * assume.t_se + vol.reactions * assume.tau_r;
}

inline constexpr int kDefaultMaxDistance = 99;
inline constexpr double kDefaultQecBudget = 0.05;

/// Smallest odd d >= 3 with volume(d) * p_L(d) <= budget.
template <typename VolumeAt>
  requires std::invocable<VolumeAt, int>
int choose_distance(const PhysicalAssumptions& assume, VolumeAt&& volume_at,
                    double budget = kDefaultQecBudget, int d_max = kDefaultMaxDistance) {
  assume.validate();
  require(budget > 0 && budget < 1, ErrorKind::invalid_argument,
          "failure budget must lie in (0, 1)");
  for (int d = 3; d <= d_max; d += 2) {
    const LogicalVolume vol = volume_at(d);
    if (vol.patch_rounds(assume) * logical_error_rate(assume, d) <= budget) return d;
  }
  throw EstimatorError(ErrorKind::budget_infeasible,
                       "no code distance <= " + std::to_string(d_max) +
                           " meets the failure budget");
}

}  // namespace ftqc
