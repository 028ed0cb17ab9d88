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

namespace ftqc {

/// Base-2 logarithm.
inline double lg(double x) { return std::log2(x); }

/// ceil(lg n) for n >= 1, computed on integers.
inline int ceil_lg(std::uint64_t n) {
  int bits = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v <<= 1;
    ++bits;
  }
  return bits;
}

/// Ceiling that snaps values within a few ulps of an integer onto it, so that
/// quotients such as 75e-6 / 5e-6 do not round up to 16.
inline double ceil_snap(double x) {
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
    return nearest;
  }
  return std::ceil(x);
}

}  // namespace ftqc
