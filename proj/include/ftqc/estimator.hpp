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

// End-to-end estimation: budget allocation, code-distance fixed point,
// factory provisioning and physical totals. Also the minimal-footprint
// estimator used for quick back-of-envelope rows, sensitivity bands and
// multi-scheme comparisons.

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ftqc/cost_models.hpp"
#include "ftqc/errors.hpp"
#include "ftqc/factories.hpp"
#include "ftqc/fermi_hubbard.hpp"
#include "ftqc/qec.hpp"
#include "ftqc/rational.hpp"

namespace ftqc {

struct EstimateOptions {
  double E_qec = kDefaultQecBudget;
  int d_max = kDefaultMaxDistance;
  double t_gate_budget = kDefaultTGateBudget;
  /// Upper bound on the number of factories; 0 means unlimited. Fewer
  /// factories than needed stretch the schedule (magic-limited).
  std::int64_t max_factories = 0;
  fh::AlgorithmOptions algorithm;
};

struct QubitRoles {
  double data_aux = 0;
  double routing = 0;
  double factories = 0;
  double total() const { return data_aux + routing + factories; }
};

struct ResourceEstimate {
  std::string label;  ///< scheme name, or "table1"
  int d = 0;
  double physical_qubits_total = 0;
  QubitRoles physical_qubits_by_role;
  double logical_patches = 0;  ///< protected patches entering the volume
  double wall_time_seconds = 0;
  double spacetime_volume = 0;  ///< patch-rounds
  double qec_failure = 0;       ///< spacetime_volume x p_L(d)

  std::int64_t factory_count = 0;
  std::string factory_name;
  double magic_stretch = 1;  ///< schedule dilation from a capped fleet
  Bottleneck bottleneck = Bottleneck::gate_limited;

  double t_count = 0;
  double timestep_depth = 0;
  double reaction_depth = 0;
  std::int64_t repetitions = 0;
  int sigma = 0;
  fh::ErrorBudget budget_ledger;
  TBudgetCheck t_check;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct Provisioned {
  std::int64_t count = 0;
  double stretch = 1;
};

/// Factories per supply site from the per-site demand in states per SE round.
inline Provisioned provision_sites(const fh::CompilationSummary& c, const FactorySpec& spec, int d,
                                   std::int64_t max_factories) {
  const Rational per_round = c.site_demand_per_timestep / Rational(d);
  const std::int64_t per_site = provision(spec, per_round).count;
  Provisioned out{per_site * c.supply_sites, 1};
  if (max_factories > 0 && out.count > max_factories) {
    require(max_factories >= c.supply_sites, ErrorKind::magic_starved,
            "factory cap " + std::to_string(max_factories) + " leaves some of the " +
                std::to_string(c.supply_sites) + " supply sites without a factory");
    const std::int64_t capped_per_site = max_factories / c.supply_sites;
    const Rational supply = spec.rate() * Rational(capped_per_site);
    out.stretch = std::max(1.0, (per_round / supply).to_double());
    out.count = capped_per_site * c.supply_sites;
  }
  return out;
}

inline LogicalVolume volume_of(const fh::CompilationSummary& c, int d, double stretch) {
  return LogicalVolume{c.protected_patches(), c.timestep_depth * d * stretch, c.reaction_depth};
}

}  // namespace detail

/// Full pipeline for one Fermi-Hubbard instance and scheme. Deterministic.
inline ResourceEstimate estimate(const fh::FHInstance& inst, fh::Scheme scheme,
                                 const PhysicalAssumptions& assume, const FactorySpec& spec,
                                 const EstimateOptions& options = {}) {
  assume.validate();
  spec.validate();
  inst.validate();
  require(options.max_factories >= 0, ErrorKind::invalid_argument,
          "max_factories must be >= 0");
  const fh::AlgorithmPlan plan = fh::plan_algorithm(inst, scheme, options.algorithm,
                                                    options.E_qec, options.t_gate_budget);

  const int d = choose_distance(
      assume,
      [&](int dd) {
        const auto c = fh::compile(plan, spec, dd);
        const auto prov = detail::provision_sites(c, spec, dd, options.max_factories);
        return detail::volume_of(c, dd, prov.stretch);
      },
      options.E_qec, options.d_max);

  const fh::CompilationSummary c = fh::compile(plan, spec, d);
  const detail::Provisioned prov = detail::provision_sites(c, spec, d, options.max_factories);
  const LogicalVolume vol = detail::volume_of(c, d, prov.stretch);
  const double q = static_cast<double>(patch_physical_qubits(d));

  ResourceEstimate out;
  out.label = fh::to_string(scheme);
  out.d = d;
  out.physical_qubits_by_role.data_aux = q * (c.data_patches + c.aux_patches);
  out.physical_qubits_by_role.routing = q * c.routing_patches;
  out.physical_qubits_by_role.factories =
      static_cast<double>((spec.qubits * Rational(prov.count)).ceil());
  out.physical_qubits_total = out.physical_qubits_by_role.total();
  out.logical_patches = vol.patches;
  out.wall_time_seconds = wall_time(vol, assume);
  out.spacetime_volume = vol.patch_rounds(assume);
  out.qec_failure = out.spacetime_volume * logical_error_rate(assume, d);
  out.factory_count = prov.count;
  out.factory_name = spec.name;
  out.magic_stretch = prov.stretch;
  out.bottleneck = prov.stretch > 1 ? Bottleneck::magic_limited : Bottleneck::gate_limited;
  out.t_count = c.t_count_total;
  out.timestep_depth = c.timestep_depth;
  out.reaction_depth = c.reaction_depth;
  out.repetitions = c.repetitions;
  out.sigma = c.sigma;
  out.budget_ledger = plan.budget;
  out.t_check = t_budget_check(c.t_count_total, spec, options.t_gate_budget);

  if (spec.valid_p > 0 && std::abs(std::log10(spec.valid_p / assume.p)) > 0.5) {
    out.warnings.push_back("factory " + spec.name + " was characterized at p = " +
                           detail::sci(spec.valid_p) + " but p = " + detail::sci(assume.p));
  }
  if (!out.t_check.pass) {
    out.warnings.push_back("T-gate error " + detail::sci(out.t_check.total_error) +
                           " exceeds budget " + detail::sci(options.t_gate_budget) +
                           "; a factory with output infidelity <= " +
                           detail::sci(out.t_check.max_infidelity) + " is required");
  }
  if (out.bottleneck == Bottleneck::magic_limited) {
    out.warnings.push_back("factory cap stretches the schedule by " +
                           detail::sci(out.magic_stretch) + "x");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minimal-footprint estimate: one T or Toffoli per d rounds, fixed routing
// overhead, factories not counted.

struct SimpleOptions {
  double E = kDefaultQecBudget;
  double routing_factor = 1.5;
  bool include_reaction_delay = true;  ///< one reaction per gate
  int d_max = kDefaultMaxDistance;
};

inline ResourceEstimate simple_estimate(double logical_qubits, double gate_count,
                                        const PhysicalAssumptions& assume,
                                        const SimpleOptions& options = {}) {
  assume.validate();
  require(logical_qubits >= 1, ErrorKind::invalid_argument, "logical qubit count must be >= 1");
  require(gate_count >= 1, ErrorKind::invalid_argument, "gate count must be >= 1");
  require(options.routing_factor >= 1, ErrorKind::invalid_argument,
          "routing factor must be >= 1");
  const double patches = options.routing_factor * logical_qubits;
  const double reactions = options.include_reaction_delay ? gate_count : 0;
  auto volume_at = [&](int d) {
    return LogicalVolume{patches, gate_count * d, reactions};
  };
  const int d = choose_distance(assume, volume_at, options.E, options.d_max);
  const LogicalVolume vol = volume_at(d);
  const double q = static_cast<double>(patch_physical_qubits(d));

  ResourceEstimate out;
  out.label = "table1";
  out.d = d;
  out.physical_qubits_by_role.data_aux = q * logical_qubits;
  out.physical_qubits_by_role.routing = q * (patches - logical_qubits);
  out.physical_qubits_total = q * patches;
  out.logical_patches = patches;
  out.wall_time_seconds = wall_time(vol, assume);
  out.spacetime_volume = vol.patch_rounds(assume);
  out.qec_failure = out.spacetime_volume * logical_error_rate(assume, d);
  out.t_count = gate_count;
  out.timestep_depth = gate_count;
  out.reaction_depth = reactions;
  out.budget_ledger.E_qec = options.E;
  return out;
}

enum class Midpoint { arithmetic, geometric };

inline const char* to_string(Midpoint m) {
  return m == Midpoint::arithmetic ? "arithmetic" : "geometric";
}

inline double midpoint(double lo, double hi, Midpoint convention) {
  require(lo > 0 && hi >= lo, ErrorKind::invalid_argument, "range needs 0 < lo <= hi");
  return convention == Midpoint::arithmetic ? 0.5 * (lo + hi) : std::sqrt(lo * hi);
}

// ---------------------------------------------------------------------------
// Sensitivity

/// Multipliers on factory qubits, factory batch time, threshold and prefactor.
struct Perturbation {
  double factory_qubits = 1;
  double factory_time = 1;
  double threshold = 1;
  double prefactor = 1;

  /// Every knob moved against the estimate by `fraction`.
  static Perturbation adverse(double fraction) {
    return {1 + fraction, 1 + fraction, 1 - fraction, 1 + fraction};
  }
  static Perturbation favorable(double fraction) {
    return {1 - fraction, 1 - fraction, 1 + fraction, 1 - fraction};
  }

  PhysicalAssumptions apply(PhysicalAssumptions a) const {
    a.p_star *= threshold;
    a.prefactor *= prefactor;
    return a;
  }
  FactorySpec apply(FactorySpec s) const {
    s.qubits = s.qubits * Rational::from_double(factory_qubits);
    s.batch_rounds = s.batch_rounds * Rational::from_double(factory_time);
    return s;
  }
};

struct SensitivityBand {
  double fraction = 0;
  ResourceEstimate low;  ///< favorable
  ResourceEstimate nominal;
  ResourceEstimate high;  ///< adverse
};

inline SensitivityBand sensitivity(const fh::FHInstance& inst, fh::Scheme scheme,
                                   const PhysicalAssumptions& assume, const FactorySpec& spec,
                                   const EstimateOptions& options = {}, double fraction = 0.05) {
  require(fraction >= 0 && fraction < 1, ErrorKind::invalid_argument,
          "sensitivity fraction must lie in [0, 1)");
  auto run = [&](const Perturbation& pert) {
    return estimate(inst, scheme, pert.apply(assume), pert.apply(spec), options);
  };
  return SensitivityBand{fraction, run(Perturbation::favorable(fraction)),
                         estimate(inst, scheme, assume, spec, options),
                         run(Perturbation::adverse(fraction))};
}

// ---------------------------------------------------------------------------
// Comparison

struct ComparisonRow {
  ResourceEstimate estimate;
  double time_ratio = 1;  ///< relative to the first row
  double qubit_ratio = 1;
  double volume_ratio = 1;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
};

inline Comparison compare(const fh::FHInstance& inst, const std::vector<fh::Scheme>& schemes,
                          const PhysicalAssumptions& assume, const FactorySpec& spec,
                          const EstimateOptions& options = {}) {
  require(!schemes.empty(), ErrorKind::invalid_argument, "compare needs at least one scheme");
  Comparison out;
  for (fh::Scheme s : schemes) {
    ComparisonRow row{estimate(inst, s, assume, spec, options)};
    const auto& ref = out.rows.empty() ? row.estimate : out.rows.front().estimate;
    row.time_ratio = row.estimate.wall_time_seconds / ref.wall_time_seconds;
    row.qubit_ratio = row.estimate.physical_qubits_total / ref.physical_qubits_total;
    row.volume_ratio = row.estimate.spacetime_volume / ref.spacetime_volume;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace ftqc
