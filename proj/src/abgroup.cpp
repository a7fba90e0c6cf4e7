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

#include "cobound/abgroup.hpp"

#include <numeric>

namespace cobound {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  for (std::int64_t n : moduli_) {
    if (n < 1) throw Error(ErrorKind::Mismatch, "cyclic modulus must be at least 1");
    order_ *= static_cast<std::size_t>(n);
  }
}

std::int64_t FinAbGroup::exponent() const noexcept {
  std::int64_t e = 1;
  for (std::int64_t n : moduli_) e = std::lcm(e, n);
  return e;
}

std::vector<Element> FinAbGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::vector<Character> FinAbGroup::characters() const {
  std::vector<Character> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(character(i));
  return out;
}

FinAbGroup FinAbGroup::product(const FinAbGroup& lhs, const FinAbGroup& rhs) {
  auto moduli = lhs.moduli_;
  moduli.insert(moduli.end(), rhs.moduli_.begin(), rhs.moduli_.end());
  return FinAbGroup(std::move(moduli));
}

std::string FinAbGroup::to_string() const {
  if (moduli_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(moduli_[i]);
  }
  return out;
}

std::string to_string(const std::vector<std::int64_t>& coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + "]";
}

FinAbGroup dual_group(const FinAbGroup& group) { return group; }

Circle pairing(const FinAbGroup& group, const Character& character, const Element& element) {
  group.require(character);
  group.require(element);
  Circle sum;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    std::int64_t n = group.moduli()[i];
    sum += Circle((character.coords[i] * element.coords[i]) % n, n);
  }
  return sum;
}

std::optional<std::pair<std::size_t, std::size_t>> first_additivity_violation(
    const FinAbGroup& group, std::span<const Circle> values) {
  if (values.size() != group.order()) {
    throw Error(ErrorKind::Mismatch, "character table is not total on the dual group");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    Character a = group.character(i);
    for (std::size_t j = 0; j < values.size(); ++j) {
      std::size_t sum = group.index_of(group.add(a, group.character(j)));
      if (values[sum] != values[i] + values[j]) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

CharacterTable iota_embed(const FinAbGroup& group, const Element& element) {
  CharacterTable table{group, {}};
  table.values.reserve(group.order());
  for (const auto& character : group.characters()) {
    table.values.push_back(pairing(group, character, element));
  }
  return table;
}

Element element_from_character_table(const CharacterTable& table) {
  const auto& group = table.group;
  if (table.values.size() != group.order()) {
    throw Error(ErrorKind::Mismatch, "character table is not total on the dual group");
  }
  Element element = group.zero();
  for (std::size_t i = 0; i < group.rank(); ++i) {
    Character generator = group.zero<CharacterTag>();
    std::int64_t n = group.moduli()[i];
    if (n > 1) generator.coords[i] = 1;
    const Circle& value = table.values[group.index_of(generator)];
    if (!value.scaled(n).is_zero()) {
      throw TorsionViolationError(i, "value " + value.to_string() + " on dual generator " +
                                         std::to_string(i) + " is not " + std::to_string(n) +
                                         "-torsion");
    }
    // n * value = 0, so value = a / n for a unique a in [0, n).
    element.coords[i] = (value.value() * Rational(n)).num();
  }
  if (iota_embed(group, element).values != table.values) {
    auto violation = first_additivity_violation(group, table.values);
    if (!violation) throw Error(ErrorKind::InternalInconsistency, "additive table failed to reconstruct");
    throw NotAdditiveError(std::nullopt, violation->first, violation->second,
                           "character table is not additive at characters " +
                               to_string(group.character(violation->first).coords) + " and " +
                               to_string(group.character(violation->second).coords));
  }
  return element;
}

}  // namespace cobound
