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

#include "cobound/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "cobound/fuzz.hpp"
#include "cobound/scenario.hpp"

namespace cobound {

using nlohmann::ordered_json;

namespace {

std::vector<std::int64_t> parse_moduli(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long n = std::stoll(item, &used);
      if (used != item.size() || n < 1) throw std::invalid_argument(item);
      out.push_back(n);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad modulus '" + item + "' in --moduli " + text);
    }
  }
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

ordered_json certificate_to_json(const Cocycle& cocycle, const Certificate& c) {
  return {{"character", c.character.coords},
          {"gamma", cocycle.action.group().id(c.gamma)},
          {"atom", cocycle.action.base()->id(c.atom)}};
}

ordered_json error_json(const Error& e) {
  ordered_json err;
  err["kind"] = to_string(e.kind());
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) err["pointer"] = v->pointer();
  err["message"] = e.what();
  return err;
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::InternalInconsistency ? kExitInternal : kExitInvalidInput;
}

ordered_json all_null_decision() {
  ordered_json out;
  out["verdict"] = "coboundary";
  out["F"] = ordered_json::object();
  out["all_null"] = true;
  return out;
}

PreparedScenario load_prepared(const std::string& path) { return prepare_scenario(load_scenario(path)); }

}  // namespace

ordered_json decision_to_json(const Cocycle& cocycle, const Decision& decision, bool detail) {
  ordered_json out;
  if (const auto* cob = std::get_if<Coboundary>(&decision)) {
    out["verdict"] = "coboundary";
    out["F"] = cond_to_json(cob->witness);
    if (detail && !cob->alphas.empty()) {
      const auto& K = cocycle.group;
      auto alphas = ordered_json::array();
      for (std::size_t c = 0; c < cob->alphas.size(); ++c) {
        alphas.push_back({{"character", K.character(c).coords},
                          {"alpha", cond_to_json(cob->alphas[c])},
                          {"retracted", cond_to_json(cob->retracted[c])}});
      }
      out["alphas"] = std::move(alphas);
      out["defects"] = {{"pairs_checked", cob->defects.pairs_checked},
                        {"nonzero", cob->defects.nonzero_defects}};
    }
  } else {
    const auto& not_cob = std::get<NotCoboundary>(decision);
    out["verdict"] = "not_coboundary";
    out["certificate"] = not_cob.certificate ? certificate_to_json(cocycle, *not_cob.certificate) : ordered_json();
  }
  return out;
}

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Decide coboundary questions for finite cocycles", "cobound"};
  app.require_subcommand(1);

  std::string file;
  bool witness = false;
  std::uint64_t max_oracle = kDefaultOracleBound;
  std::string moduli_text;
  std::vector<std::string> fuzz_moduli;
  std::string fuzz_groups = "trivial,c2,c3,klein,s3";
  std::size_t atoms = 5;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  bool records = false;

  auto* validate = app.add_subcommand("validate", "Check a scenario file");
  validate->add_option("file", file, "Scenario JSON")->required();

  auto* decide = app.add_subcommand("decide", "Run the character-wise decision pipeline");
  decide->add_option("file", file, "Scenario JSON")->required();
  decide->add_flag("--witness", witness, "Include per-character solutions and the defect log");

  auto* oracle = app.add_subcommand("oracle", "Decide by exhaustive search over potentials");
  oracle->add_option("file", file, "Scenario JSON")->required();
  oracle->add_option("--max-oracle", max_oracle, "Largest |K|^atoms to enumerate");

  auto* dual = app.add_subcommand("dual", "Print the dual group and its pairing table");
  dual->add_option("--moduli", moduli_text, "Comma-separated cyclic moduli")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Decide, then rebuild rho from the witness");
  roundtrip->add_option("file", file, "Scenario JSON")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Compare decide against the oracle on random scenarios");
  fuzz->add_option("--atoms", atoms, "Maximum number of positive atoms")->check(CLI::Range(1, 8));
  fuzz->add_option("--group", fuzz_groups, "Comma-separated groups from trivial,c2,c3,klein,s3");
  fuzz->add_option("--moduli", fuzz_moduli, "Coefficient group moduli; repeat for several groups");
  fuzz->add_option("--trials", trials, "Number of scenarios");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_option("--max-oracle", max_oracle, "Largest |K|^atoms to enumerate");
  fuzz->add_flag("--records", records, "Include one record per trial");

  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  ordered_json doc;
  try {
    if (validate->parsed()) {
      try {
        load_prepared(file);
        doc = {{"ok", true}};
      } catch (const Error& e) {
        doc = {{"ok", false}, {"error", error_json(e)}};
        err << "validate: " << e.what() << "\n";
        result.exit_code = exit_code_for(e);
      }
    } else if (decide->parsed()) {
      auto prepared = load_prepared(file);
      if (prepared.all_null()) {
        doc = all_null_decision();
      } else {
        doc = decision_to_json(*prepared.cocycle, moore_schmidt_decide(*prepared.cocycle), witness);
      }
    } else if (oracle->parsed()) {
      auto prepared = load_prepared(file);
      if (prepared.all_null()) {
        doc = all_null_decision();
      } else {
        auto found = brute_force_oracle(*prepared.cocycle, max_oracle);
        doc = decision_to_json(*prepared.cocycle, found.decision, false);
        doc["candidates_checked"] = found.candidates_checked;
      }
    } else if (dual->parsed()) {
      FinAbGroup group(parse_moduli(moduli_text));
      FinAbGroup hat = dual_group(group);
      auto elements = ordered_json::array();
      auto characters = ordered_json::array();
      auto table = ordered_json::array();
      for (const auto& k : group.elements()) elements.push_back(k.coords);
      for (const auto& c : hat.characters()) {
        characters.push_back(c.coords);
        auto row = ordered_json::array();
        for (const auto& k : group.elements()) row.push_back(pairing(group, c, k).to_string());
        table.push_back(std::move(row));
      }
      doc["group"] = {{"moduli", group.moduli()}};
      doc["dual"] = {{"moduli", hat.moduli()}};
      doc["order"] = group.order();
      doc["elements"] = std::move(elements);
      doc["characters"] = std::move(characters);
      doc["pairing"] = std::move(table);
    } else if (roundtrip->parsed()) {
      auto prepared = load_prepared(file);
      if (prepared.all_null()) {
        doc = {{"roundtrip", "ok"}, {"verdict", "coboundary"}, {"all_null", true}};
      } else {
        const Cocycle& cocycle = *prepared.cocycle;
        Decision decision = moore_schmidt_decide(cocycle);
        if (const auto* cob = std::get_if<Coboundary>(&decision)) {
          auto rebuilt = coboundary_from_potential(cocycle.action, cocycle.group, cob->witness);
          bool same = rebuilt.rho == cocycle.rho;
          for (std::size_t g = 0; same && g < cocycle.rho.size(); ++g) {
            same = cond_to_json(rebuilt.rho[g]).dump() == cond_to_json(cocycle.rho[g]).dump();
          }
          doc["roundtrip"] = same ? "ok" : "failed";
          doc["verdict"] = "coboundary";
          doc["F"] = cond_to_json(cob->witness);
          if (!same) {
            err << "roundtrip: witness does not reproduce the cocycle\n";
            result.exit_code = kExitInternal;
          }
        } else {
          doc = decision_to_json(cocycle, decision, false);
          doc["roundtrip"] = "skipped";
        }
      }
    } else if (fuzz->parsed()) {
      FuzzConfig config;
      config.max_atoms = atoms;
      config.groups = split(fuzz_groups);
      for (const auto& name : config.groups) named_group(name);
      if (!fuzz_moduli.empty()) {
        config.moduli.clear();
        for (const auto& m : fuzz_moduli) config.moduli.push_back(parse_moduli(m));
      }
      config.trials = trials;
      config.seed = seed;
      config.max_oracle = max_oracle;
      FuzzReport report = run_fuzz(config);
      doc = fuzz_report_to_json(report, records);
      if (!report.clean()) {
        err << "fuzz: decide and oracle disagree or an internal check failed\n";
        result.exit_code = kExitInternal;
      }
    }
  } catch (const Error& e) {
    doc = {{"error", error_json(e)}};
    err << e.what() << "\n";
    result.exit_code = exit_code_for(e);
  }
  result.out = doc.dump(2) + "\n";
  result.err = err.str();
  return result;
}

}  // namespace cobound
