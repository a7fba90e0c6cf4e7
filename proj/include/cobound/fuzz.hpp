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
#include <string>
#include <vector>

#include <json.hpp>

#include "cobound/cocycle.hpp"
#include "cobound/scenario.hpp"

namespace cobound {

struct FuzzConfig {
  /// Upper bound on positive-weight atoms; each trial draws 1..max_atoms.
  std::size_t max_atoms = 5;
  /// Names accepted by named_group(); one is drawn per trial.
  std::vector<std::string> groups{"trivial", "c2", "c3", "klein", "s3"};
  /// Candidate coefficient groups; one is drawn per trial.
  std::vector<std::vector<std::int64_t>> moduli{{2}, {3}, {4}, {2, 2}, {8}};
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::uint64_t max_oracle = kDefaultOracleBound;
};

/// One generated problem. For positives `potential` is the F (over the
/// positive atoms) the cocycle was built from.
struct FuzzCase {
  std::size_t index = 0;
  std::string group_name;
  bool intended_coboundary = true;
  Scenario scenario;
  std::optional<std::vector<Element>> potential;
};

/// Deterministic in (config.seed, index): each trial seeds its own engine.
FuzzCase generate_fuzz_case(const FuzzConfig& config, std::size_t index);

struct TrialRecord {
  std::size_t index = 0;
  std::string group_name;
  std::vector<std::int64_t> moduli;
  std::size_t atoms = 0;
  bool intended_coboundary = true;
  std::string decide_verdict;  // "coboundary", "not_coboundary" or "internal_error"
  std::string oracle_verdict;
  std::optional<Certificate> certificate;
  bool certificate_valid = true;
  bool witness_valid = true;
  std::string witness_json;  // compact JSON of the decide witness, for determinism checks
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t internal_errors = 0;
  std::size_t certificate_failures = 0;
  std::size_t witness_failures = 0;
  std::size_t generator_mismatches = 0;
  std::vector<TrialRecord> records;

  bool clean() const noexcept {
    return disagree == 0 && internal_errors == 0 && certificate_failures == 0 && witness_failures == 0 &&
           generator_mismatches == 0;
  }
};

/// True iff gamma fixes the atom and <k^, rho_gamma(atom)> != 0.
bool certificate_is_sound(const Cocycle& cocycle, const Certificate& certificate);

/// Runs decide and the oracle on every generated case and tallies
/// agreement, certificate soundness and witness validity.
FuzzReport run_fuzz(const FuzzConfig& config);

nlohmann::ordered_json fuzz_report_to_json(const FuzzReport& report, bool with_records);

}  // namespace cobound
