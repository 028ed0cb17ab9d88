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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ftqc/errors.hpp"
#include "ftqc/rational.hpp"

namespace ftqc {

/// A magic-state factory treated as a black box. Footprint and batch time are
/// rationals so that provisioning ceilings are exact (97.5 rounds stays 195/2).
struct FactorySpec {
  std::string name;
  Rational qubits;           ///< physical qubits per factory (q_f)
  Rational batch_rounds;     ///< SE rounds per output batch (tau_f)
  int states_per_batch = 1;  ///< n_out
  double out_infidelity = 0; ///< per output state
  double valid_p = 0;        ///< physical error rate the design was characterized at

  void validate() const {
    require(qubits > Rational(0), ErrorKind::invalid_argument, "factory qubits must be > 0");
    require(batch_rounds > Rational(0), ErrorKind::invalid_argument,
            "factory batch time must be > 0 rounds");
    require(states_per_batch >= 1, ErrorKind::invalid_argument,
            "factory must emit at least one state per batch");
    require(out_infidelity > 0 && out_infidelity < 1, ErrorKind::invalid_argument,
            "factory output infidelity must lie in (0, 1)");
  }

  /// States per SE round for a single factory.
  Rational rate() const { return Rational(states_per_batch) / batch_rounds; }

  /// Physical-qubit-rounds spent per batch.
  Rational volume() const { return qubits * batch_rounds; }
};

/// The two distillation factories: a two-level 15-to-1 design characterized
/// at p = 1e-3 and a 15-to-1 x 20-to-4 design characterized at p = 1e-4.
inline std::vector<FactorySpec> builtin_catalog() {
  return {
      FactorySpec{"F1", Rational(39100), Rational(195, 2), 1, 3.3e-14, 1e-3},
      FactorySpec{"F2", Rational(16400), Rational(90), 4, 2.4e-15, 1e-4},
  };
}

inline FactorySpec find_builtin(const std::string& name) {
  for (auto& spec : builtin_catalog()) {
    if (spec.name == name) return spec;
  }
  throw EstimatorError(ErrorKind::invalid_argument, "unknown builtin factory '" + name + "'");
}

/// Builtin whose characterization error rate is closest to p on a log scale.
inline FactorySpec builtin_for(double p) {
  auto catalog = builtin_catalog();
  return *std::min_element(catalog.begin(), catalog.end(), [p](const auto& a, const auto& b) {
    return std::abs(std::log(a.valid_p / p)) < std::abs(std::log(b.valid_p / p));
  });
}

struct FactoryFleet {
  FactorySpec spec;
  std::int64_t count = 0;
  Rational achieved_rate;  ///< states per SE round

  /// Physical qubits across the fleet, rounded up to whole qubits.
  std::int64_t physical_qubits() const { return (spec.qubits * Rational(count)).ceil(); }
};

/// Fewest factories whose combined rate meets `required_rate` (states/round).
inline FactoryFleet provision(const FactorySpec& spec, const Rational& required_rate) {
  spec.validate();
  require(required_rate >= Rational(0), ErrorKind::invalid_argument,
          "required magic-state rate must be nonnegative");
  const std::int64_t count = (required_rate / spec.rate()).ceil();
  return FactoryFleet{spec, count, spec.rate() * Rational(count)};
}

/// What-if for magic-state cultivation: 5x fewer qubits and 5x shorter
/// batches, so 25x less spacetime volume. Output count and infidelity are
/// kept from the distillation design.
inline FactorySpec cultivation_variant(const FactorySpec& spec) {
  FactorySpec out = spec;
  out.name = spec.name + "+cultivation";
  out.qubits = spec.qubits / Rational(5);
  out.batch_rounds = spec.batch_rounds / Rational(5);
  return out;
}

inline constexpr double kDefaultTGateBudget = 0.05;

struct TBudgetCheck {
  bool pass = false;
  double total_error = 0;   ///< total_t_count x out_infidelity
  double headroom = 0;      ///< budget - total_error
  double max_infidelity = 0;  ///< largest per-state infidelity that would pass
};

/// Linear-additive error from imperfect magic states against a budget.
inline TBudgetCheck t_budget_check(double total_t_count, const FactorySpec& spec,
                                   double budget = kDefaultTGateBudget) {
  require(total_t_count >= 0, ErrorKind::invalid_argument, "T count must be nonnegative");
  TBudgetCheck out;
  out.total_error = total_t_count * spec.out_infidelity;
  out.pass = out.total_error <= budget;
  out.headroom = budget - out.total_error;
  out.max_infidelity = total_t_count > 0 ? budget / total_t_count : 1.0;
  return out;
}

}  // namespace ftqc
