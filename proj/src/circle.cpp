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

#include "cobound/circle.hpp"

#include "cobound/error.hpp"

namespace cobound {

Circle::Circle(const Rational& value) : value_(value - Rational(value.floor())) {}

Circle Circle::operator-() const { return Circle(-value_); }

Circle& Circle::operator+=(const Circle& rhs) {
  *this = Circle(value_ + rhs.value_);
  return *this;
}

Circle& Circle::operator-=(const Circle& rhs) {
  *this = Circle(value_ - rhs.value_);
  return *this;
}

Circle Circle::scaled(std::int64_t n) const {
  // Reduce n mod the order first so large multipliers cannot overflow.
  std::int64_t order = value_.den();
  std::int64_t m = n % order;
  return Circle(value_ * Rational(m));
}

Circle Circle::parse(std::string_view text) { return Circle(Rational::parse(text)); }

Circle circle_arith(CircleOp op, const Circle& lhs, const Circle& rhs, std::int64_t n) {
  switch (op) {
    case CircleOp::Add:
      return lhs + rhs;
    case CircleOp::Neg:
      return -lhs;
    case CircleOp::IntScale:
      return lhs.scaled(n);
  }
  return lhs;
}

Circle divisible_root(std::int64_t n, const Circle& x) {
  if (n < 1) throw Error(ErrorKind::Mismatch, "divisible_root needs n >= 1");
  return Circle(x.value() / Rational(n));
}

std::ostream& operator<<(std::ostream& os, const Circle& c) { return os << c.to_string(); }

}  // namespace cobound
