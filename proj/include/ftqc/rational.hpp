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

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ftqc/errors.hpp"

namespace ftqc {

namespace detail {
__extension__ using wide_int = __int128;
}  // namespace detail

/// Exact non-negative-denominator rational on 64-bit integers. Used wherever
/// a ceiling is taken over quantities like 97.5 rounds, where a binary
/// floating-point product can land a hair above an integer.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    require(den != 0, ErrorKind::invalid_argument, "rational with zero denominator");
    normalize();
  }

  /// Nearest rational with denominator 10^6; exact for decimal inputs with at
  /// most six fractional digits.
  static Rational from_double(double value) {
    require(std::isfinite(value) && std::abs(value) < 9e12, ErrorKind::invalid_argument,
            "value not representable as a rational: " + std::to_string(value));
    constexpr std::int64_t kScale = 1'000'000;
    return Rational(static_cast<std::int64_t>(std::llround(value * kScale)), kScale);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Smallest integer >= this.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<detail::wide_int>(a.num_) * b.den_ + static_cast<detail::wide_int>(b.num_) * a.den_,
                static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<detail::wide_int>(a.num_) * b.den_ - static_cast<detail::wide_int>(b.num_) * a.den_,
                static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<detail::wide_int>(a.num_) * b.num_, static_cast<detail::wide_int>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    require(b.num_ != 0, ErrorKind::invalid_argument, "rational division by zero");
    return make(static_cast<detail::wide_int>(a.num_) * b.den_, static_cast<detail::wide_int>(a.den_) * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const detail::wide_int lhs = static_cast<detail::wide_int>(a.num_) * b.den_;
    const detail::wide_int rhs = static_cast<detail::wide_int>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  static detail::wide_int gcd128(detail::wide_int a, detail::wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const detail::wide_int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(detail::wide_int num, detail::wide_int den) {
    require(den != 0, ErrorKind::invalid_argument, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const detail::wide_int g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr detail::wide_int kMax = INT64_MAX;
    require(num <= kMax && num >= -kMax && den <= kMax, ErrorKind::domain,
            "rational arithmetic overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void normalize() { *this = make(num_, den_); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ftqc
