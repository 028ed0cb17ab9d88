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

// Space/time cost equations for layered circuits, the Pauli-based
// computation run-time ratio, and batched reaction-limited execution.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "ftqc/errors.hpp"
#include "ftqc/factories.hpp"
#include "ftqc/numeric.hpp"
#include "ftqc/qec.hpp"

namespace ftqc {

/// Routing patch count as a function of (Clifford parallelism, teleported layers).
using RoutingFunction = std::function<double(double parallelism, double layers)>;

/// Fast-block layout routing for Q data patches: Q + sqrt(8Q) + 1.
inline RoutingFunction fast_block_routing(double logical_qubits) {
  return [logical_qubits](double, double) {
    return logical_qubits + std::sqrt(8 * logical_qubits) + 1;
  };
}

/// Fixed multiple of the data patch count.
inline RoutingFunction ratio_routing(double ratio, double logical_qubits) {
  return [ratio, logical_qubits](double, double) { return ratio * logical_qubits; };
}

/// Summary of a layered circuit. `N_c / P_c` Clifford layers and
/// `N_nc / P_nc` non-Clifford layers.
struct CircuitProfile {
  double logical_qubits = 1;     ///< Q
  double clifford_gates = 0;     ///< N_c
  double nonclifford_gates = 0;  ///< N_nc
  double clifford_parallelism = 1;
  double nonclifford_parallelism = 1;
  double teleported_layers = 1;  ///< M
  double reaction_storage = 0;   ///< k; 0 disables reaction-limited execution
  RoutingFunction routing = [](double, double) { return 0.0; };

  void validate() const {
    require(logical_qubits >= 1, ErrorKind::invalid_argument, "profile needs Q >= 1");
    require(clifford_gates >= 0 && nonclifford_gates >= 0, ErrorKind::invalid_argument,
            "gate counts must be nonnegative");
    require(clifford_parallelism >= 1 && nonclifford_parallelism >= 1,
            ErrorKind::invalid_argument, "parallelism factors must be >= 1");
    require(teleported_layers >= 1, ErrorKind::invalid_argument, "M must be >= 1");
    require(reaction_storage >= 0, ErrorKind::invalid_argument, "k must be >= 0");
  }

  double routing_patches() const {
    return routing ? routing(clifford_parallelism, teleported_layers) : 0.0;
  }
};

enum class Bottleneck { gate_limited, magic_limited };

inline const char* to_string(Bottleneck b) {
  return b == Bottleneck::gate_limited ? "gate-limited" : "magic-limited";
}

struct CostBreakdown {
  // Space, in physical qubits.
  double data_qubits = 0;
  double routing_qubits = 0;
  double teleport_qubits = 0;  ///< teleportation or reaction-limited storage
  double factory_qubits = 0;
  double space_physical = 0;

  // Time, in seconds. time_seconds = max(gate_time, magic_time).
  double gate_time = 0;
  double magic_time = 0;
  double time_seconds = 0;
  Bottleneck bottleneck = Bottleneck::gate_limited;

  double volume = 0;             ///< space_physical x time_seconds (qubit-seconds)
  double magic_prep_volume = 0;  ///< factory qubit-seconds spent distilling
};

/// Clifford CNOT-class gate time tau_c(d).
inline double clifford_gate_time(int d, const PhysicalAssumptions& assume,
                                 const GateTimingModel& timing) {
  return timing.seconds(GateKind::cnot, d, assume);
}

/// Non-Clifford layer time: teleported with a corrective S (2 tau_c + tau_r),
/// or tau_r when executed at the reaction limit.
inline double nonclifford_layer_time(const CircuitProfile& profile, int d,
                                     const PhysicalAssumptions& assume,
                                     const GateTimingModel& timing) {
  if (profile.reaction_storage > 0) return assume.tau_r;
  return 2 * clifford_gate_time(d, assume, timing) + assume.tau_r;
}

inline CostBreakdown clifford_cost(const CircuitProfile& profile, int d,
                                   const PhysicalAssumptions& assume,
                                   const GateTimingModel& timing =
                                       GateTimingModel::lattice_surgery()) {
  profile.validate();
  assume.validate();
  require(profile.nonclifford_gates == 0, ErrorKind::invalid_argument,
          "clifford_cost requires N_nc = 0; use general_cost");
  const double q = static_cast<double>(patch_physical_qubits(d));
  const double M = profile.teleported_layers;
  const double Pc = profile.clifford_parallelism;

  CostBreakdown out;
  out.data_qubits = q * profile.logical_qubits;
  out.routing_qubits = q * profile.routing_patches();
  out.teleport_qubits = q * 2 * (M - 1) * Pc;
  out.space_physical = out.data_qubits + out.routing_qubits + out.teleport_qubits;
  out.gate_time = profile.clifford_gates / (M * Pc) * clifford_gate_time(d, assume, timing);
  out.time_seconds = out.gate_time;
  out.volume = out.space_physical * out.time_seconds;
  return out;
}

/// General circuits. The fleet fixes the magic-state supply: tau_m, the time
/// to deliver one layer of P_nc states, is P_nc / achieved_rate rounds.
inline CostBreakdown general_cost(const CircuitProfile& profile, const FactoryFleet& fleet, int d,
                                  const PhysicalAssumptions& assume,
                                  const GateTimingModel& timing =
                                      GateTimingModel::lattice_surgery()) {
  profile.validate();
  assume.validate();
  const double q = static_cast<double>(patch_physical_qubits(d));
  const double M = profile.teleported_layers;
  const double Pc = profile.clifford_parallelism;
  const double Pnc = profile.nonclifford_parallelism;
  const double tau_c = clifford_gate_time(d, assume, timing);

  CostBreakdown out;
  out.data_qubits = q * profile.logical_qubits;
  out.routing_qubits = q * profile.routing_patches();
  out.gate_time = profile.clifford_gates * tau_c / (M * Pc);

  if (profile.nonclifford_gates == 0) {
    out.teleport_qubits = q * 2 * (M - 1) * Pc;
  } else {
    require(fleet.count > 0 && fleet.achieved_rate > Rational(0), ErrorKind::magic_starved,
            "non-Clifford gates present but the factory fleet produces no magic states");
    const double tau_nc = nonclifford_layer_time(profile, d, assume, timing);
    const double rate_per_second = fleet.achieved_rate.to_double() / assume.t_se;
    const double tau_m = Pnc / rate_per_second;
    const double tau_f = fleet.spec.batch_rounds.to_double() * assume.t_se;
    const double q_f = fleet.spec.qubits.to_double();
    const double n_out = fleet.spec.states_per_batch;

    out.teleport_qubits = q * std::max(2 * (M - 1) * Pc,
                                       profile.reaction_storage * (tau_c / assume.tau_r) * Pnc);
    // (tau_f / tau_m) q_f P_nc per state-per-batch; equals count x q_f.
    out.factory_qubits = tau_f / (n_out * tau_m) * q_f * Pnc;
    out.gate_time += profile.nonclifford_gates * tau_nc / Pnc;
    out.magic_time = profile.nonclifford_gates * tau_m / Pnc;
    out.magic_prep_volume = out.factory_qubits * out.magic_time;
  }

  out.space_physical =
      out.data_qubits + out.routing_qubits + out.teleport_qubits + out.factory_qubits;
  out.time_seconds = std::max(out.gate_time, out.magic_time);
  out.bottleneck =
      out.magic_time > out.gate_time ? Bottleneck::magic_limited : Bottleneck::gate_limited;
  out.volume = out.space_physical * out.time_seconds;
  return out;
}

/// Run time with all Cliffords compiled away and serial non-Cliffords,
/// relative to the layered circuit: P_nc / (1 + C*), where C* is the ratio of
/// Clifford depth to non-Clifford depth. Assumes M = 1 and k = 0.
inline double pbc_ratio(const CircuitProfile& profile, int d, const PhysicalAssumptions& assume,
                        const GateTimingModel& timing = GateTimingModel::lattice_surgery()) {
  profile.validate();
  require(profile.nonclifford_gates > 0, ErrorKind::undefined_ratio,
          "PBC ratio is undefined without non-Clifford gates");
  require(profile.teleported_layers == 1 && profile.reaction_storage == 0,
          ErrorKind::invalid_argument, "PBC ratio assumes M = 1 and k = 0");
  const double tau_c = clifford_gate_time(d, assume, timing);
  const double tau_nc = nonclifford_layer_time(profile, d, assume, timing);
  const double clifford_depth = profile.clifford_gates * tau_c / profile.clifford_parallelism;
  const double nonclifford_depth =
      profile.nonclifford_gates * tau_nc / profile.nonclifford_parallelism;
  const double c_star = clifford_depth / nonclifford_depth;
  return profile.nonclifford_parallelism / (1 + c_star);
}

// ---------------------------------------------------------------------------
// Reaction-limited execution

inline constexpr int kDefaultModuleQubits = 4;  ///< |T>, |S>, Bell pair

struct ReactionPlan {
  double prep_time = 0;      ///< T_prep, seconds per teleportation module
  double tau_r = 0;
  std::int64_t batch_size = 0;  ///< G_opt = ceil(T_prep / tau_r)
  std::int64_t batches = 0;
  int module_qubits = kDefaultModuleQubits;
  double time_seconds = 0;
  std::int64_t logical_qubits = 0;
};

/// Batches of G_opt auto-corrected teleported gates; each batch is paced by
/// module preparation, so time = ceil(n / G_opt) x T_prep.
inline ReactionPlan reaction_limited_plan(double prep_time, double tau_r, std::int64_t n_gates,
                                          int module_qubits = kDefaultModuleQubits) {
  require(prep_time > 0 && tau_r > 0 && n_gates > 0 && module_qubits > 0,
          ErrorKind::invalid_argument, "reaction-limited plan needs positive inputs");
  ReactionPlan plan;
  plan.prep_time = prep_time;
  plan.tau_r = tau_r;
  plan.module_qubits = module_qubits;
  plan.batch_size = std::max<std::int64_t>(1, static_cast<std::int64_t>(ceil_snap(prep_time / tau_r)));
  plan.batches = (n_gates + plan.batch_size - 1) / plan.batch_size;
  plan.time_seconds = static_cast<double>(plan.batches) * prep_time;
  plan.logical_qubits = plan.batch_size * module_qubits;
  return plan;
}

/// Module preparation: a Hadamard and a CNOT by lattice surgery, 5d rounds.
inline double teleport_module_prep_time(int d, const PhysicalAssumptions& assume) {
  require_distance(d);
  return 5.0 * d * assume.t_se;
}

struct SequentialPlan {
  double time_seconds = 0;
  std::int64_t logical_qubits = 0;
};

/// Sequential T gates by lattice surgery: d rounds to consume the state, a
/// d-round S correction needed half the time, and one reaction to decide it.
/// Uses the data qubit plus one fresh magic state.
inline SequentialPlan sequential_t_baseline(std::int64_t n_gates, int d,
                                            const PhysicalAssumptions& assume) {
  require_distance(d);
  require(n_gates >= 0, ErrorKind::invalid_argument, "gate count must be nonnegative");
  const double n = static_cast<double>(n_gates);
  const LogicalVolume vol{2, 1.5 * n * d, n};
  return SequentialPlan{wall_time(vol, assume), 2};
}

}  // namespace ftqc
