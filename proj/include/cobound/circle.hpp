/*
 *   Copyright 2026 The cobound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "cobound/rational.hpp"

namespace cobound {

/// An element of Q/Z, stored as its representative p/q in [0, 1).
///
/// Every character of a finite abelian group takes values in the torsion
/// part of the circle R/Z, so this is all of the circle the library needs.
/// Equality is equality of canonical representatives.
class Circle {
 public:
  Circle() = default;
  /// Reduces any rational mod 1.
  explicit Circle(const Rational& value);
  Circle(std::int64_t num, std::int64_t den) : Circle(Rational(num, den)) {}

  static Circle zero() { return Circle(); }

  /// Representative in [0, 1).
  const Rational& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  /// Smallest n >= 1 with n * x = 0, i.e. the reduced denominator.
  std::int64_t order() const noexcept { return value_.den(); }

  Circle operator-() const;
  Circle& operator+=(const Circle& rhs);
  Circle& operator-=(const Circle& rhs);
  friend Circle operator+(Circle lhs, const Circle& rhs) { return lhs += rhs; }
  friend Circle operator-(Circle lhs, const Circle& rhs) { return lhs -= rhs; }

  /// n * x for any integer n.
  Circle scaled(std::int64_t n) const;

  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle& lhs, const Circle& rhs) { return lhs.value_ <=> rhs.value_; }

  /// Serialized as the canonical "p/q"; zero is "0/1".
  std::string to_string() const { return value_.to_string(); }
  static Circle parse(std::string_view text);

 private:
  Rational value_;
};

enum class CircleOp { Add, Neg, IntScale };

/// Dispatching form of the circle group operations. `Add` uses `lhs` and
/// `rhs`; `Neg` uses `lhs`; `IntScale` computes `n * lhs`.
Circle circle_arith(CircleOp op, const Circle& lhs, const Circle& rhs = Circle(),
                    std::int64_t n = 0);

/// The explicit n-th root g_n: takes the representative x in [0, 1) to x/n.
/// It is a right inverse of multiplication by n, not a homomorphism.
/// Requires n >= 1.
Circle divisible_root(std::int64_t n, const Circle& x);

std::ostream& operator<<(std::ostream& os, const Circle& c);

}  // namespace cobound
