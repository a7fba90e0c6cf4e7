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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobound/abgroup.hpp"
#include "cobound/balg.hpp"
#include "cobound/cocycle.hpp"
#include "cobound/group.hpp"

namespace cobound {

/// A decision problem as authored in a scenario file, before the null
/// quotient is taken. All indices refer to positions in `space` and
/// `group`.
///
/// File layout:
///   {
///     "space":   {"atoms": [{"id": "a", "weight": "1/3"}, ...]},
///     "group":   {"elements": ["e", "g"], "table": [[0,1],[1,0]], "identity": 0},
///     "action":  {"e": {"a": "a", ...}, "g": {"a": "b", ...}},
///     "K":       {"moduli": [2]},
///     "cocycle": {"e": {"a": [0], ...}, "g": {"a": [1], ...}}
///   }
/// Cocycle entries on zero-weight atoms may be omitted and are ignored.
struct Scenario {
  ConcreteSpace space;
  FiniteGroup group;
  /// gamma -> concrete atom -> concrete atom
  std::vector<std::vector<std::size_t>> action;
  FinAbGroup K;
  /// gamma -> concrete atom -> value; empty only on null atoms
  std::vector<std::vector<std::optional<Element>>> cocycle;
};

/// The scenario over its measure algebra. `cocycle` is empty when every
/// atom is null, in which case every cocycle is trivially a coboundary.
struct PreparedScenario {
  std::optional<NullQuotient> quotient;
  std::optional<Cocycle> cocycle;

  bool all_null() const noexcept { return !cocycle.has_value(); }
};

/// Structural parse. Throws ValidationError with a JSON pointer to the
/// offending field.
Scenario scenario_from_json(const nlohmann::json& doc);

/// Takes the null quotient, abstracts the action, and checks group laws,
/// the action homomorphism and the cocycle equation. Throws ValidationError.
PreparedScenario prepare_scenario(const Scenario& scenario);

/// Reads, parses and fully validates a scenario file. Throws
/// Error(ErrorKind::Parse) for unreadable or malformed JSON and
/// ValidationError otherwise.
Scenario load_scenario(const std::filesystem::path& path);
Scenario load_scenario_text(const std::string& text);

nlohmann::ordered_json scenario_to_json(const Scenario& scenario);

/// Conditional K-element as {atom_id: [coords]} in atom order.
nlohmann::ordered_json cond_to_json(const CondK& value);
nlohmann::ordered_json cond_to_json(const CondCircle& value);

}  // namespace cobound
