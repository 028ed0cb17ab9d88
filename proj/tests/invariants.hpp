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

// Randomized invariant suites shared by the property tests and the
// acceptance binary. Each suite draws `cases` inputs from a fixed seed and
// records the first counterexample.

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "ftqc/cli/app.hpp"
#include "ftqc/estimator.hpp"
#include "oracles.hpp"

namespace invariants {

using namespace ftqc;

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(int i, const std::string& what) {
    if (failures++ == 0) first_failure = "case " + std::to_string(i) + ": " + what;
  }
};

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

/// choose_distance agrees with a direct scan, passes at d and fails at d - 2.
inline Outcome distance_fixed_point(int cases) {
  std::mt19937_64 rng(20260101);
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    PhysicalAssumptions a;
    a.p = log_uniform(rng, 1e-6, 9e-3);
    a.prefactor = log_uniform(rng, 0.01, 1);
    a.tau_r = log_uniform(rng, 1e-7, 1e-5);
    const double patches = log_uniform(rng, 1, 1e6);
    const double rounds_per_d = log_uniform(rng, 1, 1e12);
    const double reactions = log_uniform(rng, 1, 1e10);
    auto vol = [&](int d) { return LogicalVolume{patches, rounds_per_d * d, reactions}; };
    int got = -1;
    try {
      got = choose_distance(a, vol);
    } catch (const EstimatorError& e) {
      if (e.kind() != ErrorKind::budget_infeasible) out.fail(i, e.what());
    }
    const int ref = oracle::distance(a.p, a.p_star, a.prefactor, patches, rounds_per_d,
                                     reactions * a.reaction_rounds());
    if (got != ref) {
      out.fail(i, "d = " + std::to_string(got) + ", scan gives " + std::to_string(ref));
      continue;
    }
    if (got < 0) continue;
    if (vol(got).patch_rounds(a) * logical_error_rate(a, got) > 0.05) out.fail(i, "d fails budget");
    if (got > 3 && vol(got - 2).patch_rounds(a) * logical_error_rate(a, got - 2) <= 0.05) {
      out.fail(i, "d - 2 already passes");
    }
  }
  return out;
}

/// Fleets always meet demand, one factory fewer never does, and the count
/// matches counting up from zero.
inline Outcome never_under_provision(int cases) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> qubits(1, 100000), half_rounds(1, 400),
      outputs(1, 8), num(0, 5000), den(1, 1000);
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const FactorySpec spec{"rand", Rational(qubits(rng)), Rational(half_rounds(rng), 2),
                           static_cast<int>(outputs(rng)), 1e-12, 1e-3};
    const Rational need(num(rng), den(rng));
    const auto fleet = provision(spec, need);
    if (fleet.achieved_rate < need) out.fail(i, "fleet below demand");
    if (fleet.count > 0 && spec.rate() * Rational(fleet.count - 1) >= need) {
      out.fail(i, "fleet larger than needed");
    }
    const auto ref = oracle::factories_by_counting(
        static_cast<double>(need.num()), static_cast<double>(need.den()), spec.states_per_batch,
        spec.batch_rounds.to_double());
    if (fleet.count != ref) out.fail(i, "count differs from counting oracle");
  }
  return out;
}

/// pbc_ratio equals serial non-Clifford time over the layered gate time.
inline Outcome pbc_cross_check(int cases) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> half_d(1, 25);
  const auto fleet = provision(find_builtin("F1"), Rational(1000000));
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    CircuitProfile p;
    p.logical_qubits = log_uniform(rng, 1, 1e4);
    p.clifford_gates = log_uniform(rng, 1, 1e9);
    p.nonclifford_gates = log_uniform(rng, 1, 1e9);
    p.clifford_parallelism = log_uniform(rng, 1, 100);
    p.nonclifford_parallelism = log_uniform(rng, 1, 100);
    PhysicalAssumptions a;
    a.tau_r = log_uniform(rng, 1e-7, 1e-4);
    const int d = 2 * half_d(rng) + 1;
    const auto layered = general_cost(p, fleet, d, a);
    if (layered.bottleneck != Bottleneck::gate_limited) {
      out.fail(i, "fleet unexpectedly magic-limited");
      continue;
    }
    const double serial = p.nonclifford_gates * (2 * (2.0 * d * a.t_se) + a.tau_r);
    const double rel = pbc_ratio(p, d, a) / (serial / layered.gate_time) - 1;
    if (std::abs(rel) > 1e-9) out.fail(i, "relative mismatch " + std::to_string(rel));
  }
  return out;
}

/// eps_algorithm + eps_synthesis = eps_total and rotations x eps_s <= eps_synthesis,
/// both for the allocator and for planned instances.
inline Outcome ledger_sums(int cases) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> half_L(1, 40), pick(0, 3);
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const double eps = log_uniform(rng, 1e-6, 0.5);
    const double rotations = log_uniform(rng, 1, 1e15);
    const fh::FHInstance inst{2 * half_L(rng), 1.0, log_uniform(rng, 0.5, 16),
                              log_uniform(rng, 1, 1e3), eps};
    const auto plan = fh::plan_algorithm(inst, fh::kAllSchemes[pick(rng)], {});
    for (const auto& b : {fh::ErrorBudget::allocate(eps, rotations), plan.budget}) {
      if (std::abs((b.eps_algorithm + b.eps_synthesis) / eps - 1) > 1e-15) {
        out.fail(i, "split does not sum to eps_total");
      }
      if (b.eps_s_per_rotation * b.rotation_count > b.eps_synthesis * (1 + 1e-12)) {
        out.fail(i, "rotations overspend the synthesis budget");
      }
    }
    if (plan.sigma != oracle::sigma(plan.budget.eps_s_per_rotation)) out.fail(i, "sigma mismatch");
  }
  return out;
}

/// A JSON report fed back in as the config reproduces itself byte for byte.
inline Outcome report_round_trip(int cases) {
  using cli::Json;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> half_L(1, 20), pick(0, 3);
  const Json defaults = cli::load_defaults();
  const char* schemes[] = {"plaq_serial", "plaq_L", "plaq_L2", "qsp"};
  Outcome out;
  for (int i = 0; i < cases; ++i, ++out.cases) {
    const Json inputs = {{"physical", {{"p", log_uniform(rng, 1e-5, 5e-3)}}},
                         {"algorithm",
                          {{"scheme", schemes[pick(rng)]},
                           {"L", 2 * half_L(rng)},
                           {"U", log_uniform(rng, 0.5, 16)},
                           {"T_evol", log_uniform(rng, 1, 300)},
                           {"eps_total", log_uniform(rng, 1e-4, 0.1)}}},
                         {"sensitivity", {{"enabled", i % 10 == 0}}}};
    try {
      const auto first = cli::run_estimate(defaults, inputs, {});
      const Json reread = Json::parse(Json::parse(first.body).dump())["inputs"];
      const auto second = cli::run_estimate(defaults, reread, {});
      if (first.body != second.body) out.fail(i, "report changed on re-ingestion");
    } catch (const std::exception& e) {
      out.fail(i, e.what());
    }
  }
  return out;
}

}  // namespace invariants
