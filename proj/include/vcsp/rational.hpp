// Copyright 2026 The vcsp Authors
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

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace vcsp {

/// Arbitrary precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "7", "-3", "p/q".
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Rational extended with +infinity.  Arithmetic follows the conventions
/// 0*inf = inf*0 = 0, x + inf = inf + x = inf and x <= inf.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(const Rational& q) : value_(q) {}  // NOLINT
  ExtRational(long v) : value_(v) {}              // NOLINT

  static ExtRational infinity() {
    ExtRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  /// Finite value; throws ContractError on infinity.
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& x, const ExtRational& y);
  friend ExtRational operator*(const ExtRational& x, const ExtRational& y);
  ExtRational& operator+=(const ExtRational& y) {
    *this = *this + y;
    return *this;
  }

  friend bool operator==(const ExtRational& x, const ExtRational& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& x,
                                          const ExtRational& y);

 private:
  bool infinite_ = false;
  Rational value_{0};
};

/// "inf" or the rational text form.
std::string to_string(const ExtRational& e);
ExtRational parse_ext_rational(std::string_view text);

}  // namespace vcsp
