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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobound {

enum class ErrorKind {
  AllNull,
  UnknownAtom,
  Partial,
  Mismatch,
  NotInvertible,
  NullImage,
  Inconsistent,
  NotAdditive,
  TorsionViolation,
  NotSupported,
  InvalidCocycle,
  InternalInconsistency,
  TooLarge,
  Overflow,
  Parse,
  Validation,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. `kind()` lets callers
/// dispatch without a cascade of catch clauses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A family of circle values that fails additivity in the character
/// argument. `atom` is set when the family is a conditional one.
class NotAdditiveError : public Error {
 public:
  NotAdditiveError(std::optional<std::size_t> atom, std::size_t lhs,
                   std::size_t rhs, const std::string& what)
      : Error(ErrorKind::NotAdditive, what), atom_(atom), lhs_(lhs), rhs_(rhs) {}

  std::optional<std::size_t> atom() const noexcept { return atom_; }
  /// Lexicographic indices of the two characters whose sum breaks additivity.
  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::optional<std::size_t> atom_;
  std::size_t lhs_;
  std::size_t rhs_;
};

class TorsionViolationError : public Error {
 public:
  TorsionViolationError(std::size_t factor, const std::string& what)
      : Error(ErrorKind::TorsionViolation, what), factor_(factor) {}

  /// Index of the cyclic factor whose dual generator has the wrong order.
  std::size_t factor() const noexcept { return factor_; }

 private:
  std::size_t factor_;
};

/// Raised by the Boolean extension when the generator data violates a
/// finite Boolean identity. The identity is `meet_i G_i^{s_i} = 0` in the
/// domain while the matching meet of images contains `target_atom`.
class InconsistentError : public Error {
 public:
  InconsistentError(std::vector<bool> signs, std::size_t target_atom,
                    const std::string& what)
      : Error(ErrorKind::Inconsistent, what),
        signs_(std::move(signs)),
        target_atom_(target_atom) {}

  const std::vector<bool>& signs() const noexcept { return signs_; }
  std::size_t target_atom() const noexcept { return target_atom_; }

 private:
  std::vector<bool> signs_;
  std::size_t target_atom_;
};

class NotSupportedError : public Error {
 public:
  NotSupportedError(std::size_t atom, const std::string& what)
      : Error(ErrorKind::NotSupported, what), atom_(atom) {}

  std::size_t atom() const noexcept { return atom_; }

 private:
  std::size_t atom_;
};

/// Invalid scenario input. `pointer` is a JSON pointer into the document.
class ValidationError : public Error {
 public:
  ValidationError(std::string pointer, const std::string& what)
      : Error(ErrorKind::Validation, what), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace cobound
