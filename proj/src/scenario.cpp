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

#include "cobound/scenario.hpp"

#include <fstream>
#include <sstream>

#include "cobound/error.hpp"

namespace cobound {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string token(const std::string& raw) {
  std::string out;
  for (char ch : raw) {
    if (ch == '~') {
      out += "~0";
    } else if (ch == '/') {
      out += "~1";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string join(const std::string& pointer, const std::string& key) { return pointer + "/" + token(key); }
std::string join(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

[[noreturn]] void invalid(const std::string& pointer, const std::string& what) {
  throw ValidationError(pointer.empty() ? "/" : pointer, what + " (at " + (pointer.empty() ? "/" : pointer) + ")");
}

const json& member(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) invalid(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(join(pointer, key), "missing field '" + key + "'");
  return *it;
}

std::size_t as_index(const json& v, const std::string& pointer) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) invalid(pointer, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational as_rational(const json& v, const std::string& pointer) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  } catch (const Error& e) {
    invalid(pointer, e.what());
  }
  invalid(pointer, "expected a rational written as \"p/q\"");
}

Element as_element(const json& v, const FinAbGroup& K, const std::string& pointer) {
  if (!v.is_array()) invalid(pointer, "expected a coordinate array");
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) invalid(join(pointer, i), "expected an integer coordinate");
    coords.push_back(v[i].get<std::int64_t>());
  }
  Element e(std::move(coords));
  if (!K.contains(e)) invalid(pointer, to_string(e.coords) + " is not a reduced element of " + K.to_string());
  return e;
}

ConcreteSpace parse_space(const json& doc) {
  const json& atoms = member(member(doc, "space", ""), "atoms", "/space");
  if (!atoms.is_array()) invalid("/space/atoms", "expected an array");
  std::vector<WeightedAtom> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::string p = join("/space/atoms", i);
    const json& id = member(atoms[i], "id", p);
    if (!id.is_string() || id.get<std::string>().empty()) invalid(join(p, "id"), "expected a non-empty string");
    for (const auto& seen : out) {
      if (seen.id == id.get<std::string>()) invalid(join(p, "id"), "duplicate atom id '" + seen.id + "'");
    }
    Rational w = as_rational(member(atoms[i], "weight", p), join(p, "weight"));
    if (w < Rational(0)) invalid(join(p, "weight"), "weight must be non-negative");
    out.push_back({id.get<std::string>(), w});
  }
  return ConcreteSpace(std::move(out));
}

FiniteGroup parse_group(const json& doc) {
  const json& g = member(doc, "group", "");
  const json& elements = member(g, "elements", "/group");
  if (!elements.is_array() || elements.empty()) invalid("/group/elements", "expected a non-empty array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string() || elements[i].get<std::string>().empty()) {
      invalid(join("/group/elements", i), "expected a non-empty string");
    }
    for (const auto& seen : ids) {
      if (seen == elements[i].get<std::string>()) invalid(join("/group/elements", i), "duplicate element id");
    }
    ids.push_back(elements[i].get<std::string>());
  }
  const json& table = member(g, "table", "/group");
  if (!table.is_array()) invalid("/group/table", "expected a 2D array");
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t a = 0; a < table.size(); ++a) {
    if (!table[a].is_array()) invalid(join("/group/table", a), "expected an array");
    std::vector<std::size_t> row;
    for (std::size_t b = 0; b < table[a].size(); ++b) {
      row.push_back(as_index(table[a][b], join(join("/group/table", a), b)));
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != ids.size()) invalid("/group/table", "table must have one row per element");
  std::size_t identity = as_index(member(g, "identity", "/group"), "/group/identity");
  if (identity >= ids.size()) invalid("/group/identity", "identity index out of range");
  if (auto failure = FiniteGroup::check_laws(rows, identity)) {
    invalid("/group/table", "not a group table: " + *failure);
  }
  return FiniteGroup(std::move(ids), std::move(rows), identity);
}

FinAbGroup parse_K(const json& doc) {
  const json& moduli = member(member(doc, "K", ""), "moduli", "/K");
  if (!moduli.is_array()) invalid("/K/moduli", "expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!moduli[i].is_number_integer() || moduli[i].get<std::int64_t>() < 1) {
      invalid(join("/K/moduli", i), "modulus must be an integer >= 1");
    }
    out.push_back(moduli[i].get<std::int64_t>());
  }
  return FinAbGroup(std::move(out));
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) invalid("", "scenario must be a JSON object");
  Scenario s;
  s.space = parse_space(doc);
  s.group = parse_group(doc);
  s.K = parse_K(doc);

  const json& action = member(doc, "action", "");
  if (!action.is_object()) invalid("/action", "expected an object keyed by group element");
  const json& cocycle = member(doc, "cocycle", "");
  if (!cocycle.is_object()) invalid("/cocycle", "expected an object keyed by group element");
  for (const auto& [key, unused] : action.items()) {
    if (!s.group.index_of(key)) invalid(join("/action", key), "unknown group element '" + key + "'");
  }
  for (const auto& [key, unused] : cocycle.items()) {
    if (!s.group.index_of(key)) invalid(join("/cocycle", key), "unknown group element '" + key + "'");
  }

  const std::size_t n = s.space.size();
  for (std::size_t g = 0; g < s.group.order(); ++g) {
    const std::string& gid = s.group.id(g);
    std::string ap = join("/action", gid);
    const json& map = member(action, gid, "/action");
    if (!map.is_object()) invalid(ap, "expected an object mapping atom ids to atom ids");
    std::vector<std::size_t> images(n);
    for (const auto& [from, to] : map.items()) {
      if (!s.space.index_of(from)) invalid(join(ap, from), "unknown atom '" + from + "'");
      if (!to.is_string() || !s.space.index_of(to.get<std::string>())) {
        invalid(join(ap, from), "image must be an atom id");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      const std::string& xid = s.space.atom(x).id;
      const json& image = member(map, xid, ap);
      images[x] = *s.space.index_of(image.get<std::string>());
    }
    s.action.push_back(std::move(images));

    std::string cp = join("/cocycle", gid);
    const json& values = member(cocycle, gid, "/cocycle");
    if (!values.is_object()) invalid(cp, "expected an object mapping atom ids to coordinates");
    for (const auto& [atom, unused] : values.items()) {
      if (!s.space.index_of(atom)) invalid(join(cp, atom), "unknown atom '" + atom + "'");
    }
    std::vector<std::optional<Element>> row(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto& atom = s.space.atom(x);
      auto it = values.find(atom.id);
      if (it == values.end()) {
        if (!atom.weight.is_zero()) invalid(join(cp, atom.id), "missing cocycle value");
        continue;
      }
      row[x] = as_element(*it, s.K, join(cp, atom.id));
    }
    s.cocycle.push_back(std::move(row));
  }
  return s;
}

PreparedScenario prepare_scenario(const Scenario& s) {
  PreparedScenario out;
  try {
    out.quotient = quotient_nulls(s.space);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::AllNull) throw;
    return out;
  }
  const auto& q = *out.quotient;

  std::vector<AbstractMap> maps;
  for (std::size_t g = 0; g < s.group.order(); ++g) {
    try {
      maps.push_back(abstract_of_concrete(q, q, s.action.at(g)));
    } catch (const Error& e) {
      invalid(join("/action", s.group.id(g)), e.what());
    }
  }
  std::optional<GroupAction> action;
  try {
    action.emplace(s.group, q.algebra, std::move(maps));
  } catch (const Error& e) {
    invalid("/action", std::string("not a group action: ") + e.what());
  }

  Cocycle cocycle{*action, s.K, {}};
  for (std::size_t g = 0; g < s.group.order(); ++g) {
    CondK rho{q.algebra, std::vector<Element>(q.algebra->size())};
    for (std::size_t x = 0; x < s.space.size(); ++x) {
      if (!q.survivor[x]) continue;
      const auto& value = s.cocycle.at(g).at(x);
      if (!value) invalid(join(join("/cocycle", s.group.id(g)), s.space.atom(x).id), "missing cocycle value");
      rho[*q.survivor[x]] = *value;
    }
    cocycle.rho.push_back(std::move(rho));
  }
  if (auto v = validate_cocycle(cocycle)) {
    const auto& group = s.group;
    invalid(join(join("/cocycle", group.id(group.mul(v->gamma1, v->gamma2))), q.algebra->id(v->atom)),
            "cocycle equation fails at (gamma1=" + group.id(v->gamma1) + ", gamma2=" + group.id(v->gamma2) +
                ", atom=" + q.algebra->id(v->atom) + ")");
  }
  out.cocycle = std::move(cocycle);
  return out;
}

Scenario load_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  Scenario s = scenario_from_json(doc);
  prepare_scenario(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_scenario_text(buffer.str());
}

ordered_json scenario_to_json(const Scenario& s) {
  ordered_json doc;
  ordered_json atoms = ordered_json::array();
  for (const auto& a : s.space.atoms()) atoms.push_back({{"id", a.id}, {"weight", a.weight.to_string()}});
  doc["space"] = {{"atoms", atoms}};
  doc["group"] = {{"elements", s.group.ids()}, {"table", s.group.table()}, {"identity", s.group.identity()}};
  ordered_json action = ordered_json::object();
  ordered_json cocycle = ordered_json::object();
  for (std::size_t g = 0; g < s.group.order(); ++g) {
    ordered_json map = ordered_json::object();
    ordered_json values = ordered_json::object();
    for (std::size_t x = 0; x < s.space.size(); ++x) {
      map[s.space.atom(x).id] = s.space.atom(s.action[g][x]).id;
      if (s.cocycle[g][x]) values[s.space.atom(x).id] = s.cocycle[g][x]->coords;
    }
    action[s.group.id(g)] = std::move(map);
    cocycle[s.group.id(g)] = std::move(values);
  }
  doc["action"] = std::move(action);
  doc["K"] = {{"moduli", s.K.moduli()}};
  doc["cocycle"] = std::move(cocycle);
  return doc;
}

ordered_json cond_to_json(const CondK& value) {
  ordered_json out = ordered_json::object();
  for (std::size_t x = 0; x < value.size(); ++x) out[value.base->id(x)] = value[x].coords;
  return out;
}

ordered_json cond_to_json(const CondCircle& value) {
  ordered_json out = ordered_json::object();
  for (std::size_t x = 0; x < value.size(); ++x) out[value.base->id(x)] = value[x].to_string();
  return out;
}

}  // namespace cobound
