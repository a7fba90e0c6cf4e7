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

#include <string>
#include <vector>

#include <json.hpp>

#include "cobound/cocycle.hpp"

namespace cobound {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  /// An identity the decision pipeline proves impossible to fail did fail.
  kExitInternal = 2,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;  // one JSON document
  std::string err;  // diagnostics
};

/// Runs one subcommand (validate, decide, oracle, dual, roundtrip, fuzz).
/// `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

/// JSON form of a decision; `detail` adds the per-character solutions and
/// the defect log for coboundaries.
nlohmann::ordered_json decision_to_json(const Cocycle& cocycle, const Decision& decision, bool detail);

}  // namespace cobound
