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
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cobound/abgroup.hpp"
#include "cobound/conditional.hpp"

namespace cobound {

/// A family (rho_gamma) of K-valued conditional elements indexed by the
/// acting group, meant to satisfy
///   rho_{ab}(x) = rho_a(T^b x) + rho_b(x).
struct Cocycle {
  GroupAction action;
  FinAbGroup group;
  std::vector<CondK> rho;
};

struct CocycleViolation {
  std::size_t gamma1;
  std::size_t gamma2;
  std::size_t atom;

  friend bool operator==(const CocycleViolation&, const CocycleViolation&) = default;
};

/// Checks every (gamma1, gamma2, atom) instance of the cocycle equation, in
/// that nesting order, and reports the first failure. Throws Error(Mismatch)
/// if `rho` is not shaped like a K-valued family over the action's base.
std::optional<CocycleViolation> validate_cocycle(const Cocycle& cocycle);

/// rho_gamma = F o T^gamma - F.
Cocycle coboundary_from_potential(const GroupAction& action, const FinAbGroup& group, const CondK& potential);

/// The stabilizer obstruction to solving a circle cocycle: gamma fixes
/// `atom` but c_gamma(atom) != 0.
struct Obstruction {
  std::size_t gamma;
  std::size_t atom;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

using CircleSolution = std::variant<CondCircle, Obstruction>;

/// Solves alpha o T^gamma - alpha = c_gamma for a circle-valued cocycle c.
///
/// Orbits are handled in order of their lowest atom x0. A stabilizer
/// element with c_gamma(x0) != 0 is returned as an obstruction; otherwise
/// alpha(x0) = 0 and alpha(T^gamma x0) = c_gamma(x0). The result is checked
/// against every (gamma, x) and Error(InternalInconsistency) is thrown if
/// that fails, which only happens for inputs that are not cocycles.
CircleSolution solve_circle_coboundary(const GroupAction& action, const std::vector<CondCircle>& c);
CircleSolution solve_circle_coboundary(const GroupAction& action, const OrbitDecomposition& orbits,
                                       const std::vector<CondCircle>& c);

/// c(k1, k2) = alpha_{k1+k2} - alpha_{k1} - alpha_{k2}. For genuine
/// solutions this is invariant; otherwise Error(InternalInconsistency).
CondCircle defect(const GroupAction& action, const CondCircle& alpha_first, const CondCircle& alpha_second,
                  const CondCircle& alpha_sum);

struct Certificate {
  Character character;
  std::size_t gamma;
  std::size_t atom;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct DefectLog {
  std::size_t pairs_checked = 0;
  std::size_t nonzero_defects = 0;
};

struct Coboundary {
  CondK witness;
  /// Per character (lexicographic order): the solver output alpha and the
  /// retracted alpha - w(alpha) that the witness is reconstructed from.
  std::vector<CondCircle> alphas;
  std::vector<CondCircle> retracted;
  DefectLog defects;
};

struct NotCoboundary {
  /// Always set by the decision engine; the brute-force oracle leaves it
  /// empty.
  std::optional<Certificate> certificate;
};

using Decision = std::variant<Coboundary, NotCoboundary>;

inline bool is_coboundary(const Decision& d) { return std::holds_alternative<Coboundary>(d); }

/// Decides whether a cocycle is a coboundary by solving each character
/// <k^, rho> separately, measuring the failure of additivity across
/// characters, removing it with the retract w and reassembling a K-valued
/// witness by conditional Pontryagin duality. The final identity
/// rho_gamma = F o T^gamma - F is verified before returning.
///
/// Throws Error(InvalidCocycle) when the input fails validate_cocycle and
/// Error(InternalInconsistency) if any of the internal identities fails.
Decision moore_schmidt_decide(const Cocycle& cocycle);

inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

struct OracleResult {
  Decision decision;
  std::uint64_t candidates_checked = 0;
};

/// Enumerates every F in K^atoms, lexicographically with the first atom most
/// significant, and returns the first with rho_gamma = F o T^gamma - F.
/// Throws Error(TooLarge) if |K|^atoms exceeds `max_candidates`.
OracleResult brute_force_oracle(const Cocycle& cocycle, std::uint64_t max_candidates = kDefaultOracleBound);

}  // namespace cobound
