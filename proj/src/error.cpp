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

#include "cobound/error.hpp"

namespace cobound {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AllNull: return "all_null";
    case ErrorKind::UnknownAtom: return "unknown_atom";
    case ErrorKind::Partial: return "partial";
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::NotInvertible: return "not_invertible";
    case ErrorKind::NullImage: return "null_image";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::NotAdditive: return "not_additive";
    case ErrorKind::TorsionViolation: return "torsion_violation";
    case ErrorKind::NotSupported: return "not_supported";
    case ErrorKind::InvalidCocycle: return "invalid_cocycle";
    case ErrorKind::InternalInconsistency: return "internal_inconsistency";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
  }
  return "unknown";
}

}  // namespace cobound
