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

#include <stdexcept>
#include <string>

namespace ftqc {

enum class ErrorKind {
  invalid_argument,
  invalid_distance,
  budget_infeasible,
  magic_starved,
  undefined_ratio,
  invalid_schedule,
  domain,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_distance: return "invalid-distance";
    case ErrorKind::budget_infeasible: return "budget-infeasible";
    case ErrorKind::magic_starved: return "magic-starved";
    case ErrorKind::undefined_ratio: return "undefined-ratio";
    case ErrorKind::invalid_schedule: return "invalid-schedule";
    case ErrorKind::domain: return "domain";
  }
  return "unknown";
}

/// Raised by every estimator operation whose preconditions fail or whose
/// result does not exist. `kind()` lets callers (the CLI in particular) map
/// failures onto exit codes without parsing messages.
class EstimatorError : public std::runtime_error {
 public:
  EstimatorError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Infeasibility is a property of the inputs, not a malformed request.
  bool is_infeasible() const noexcept {
    return kind_ == ErrorKind::budget_infeasible ||
           kind_ == ErrorKind::magic_starved;
  }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) throw EstimatorError(kind, what);
}

}  // namespace ftqc
