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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cobound/circle.hpp"
#include "cobound/error.hpp"

namespace cobound {

struct ElementTag {};
struct CharacterTag {};

/// Coordinate vector over the cyclic factors of a FinAbGroup. The tag keeps
/// group elements and characters from being mixed up.
template <class Tag>
struct Coordinates {
  std::vector<std::int64_t> coords;

  Coordinates() = default;
  explicit Coordinates(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Coordinates(std::initializer_list<std::int64_t> c) : coords(c) {}

  friend bool operator==(const Coordinates&, const Coordinates&) = default;
  friend auto operator<=>(const Coordinates&, const Coordinates&) = default;
};

using Element = Coordinates<ElementTag>;
using Character = Coordinates<CharacterTag>;

/// Finite abelian group Z/n_1 x ... x Z/n_r.
///
/// Elements (and characters, which live on the same moduli) are enumerated
/// in lexicographic coordinate order, first factor most significant; that
/// index is what tables and JSON arrays are keyed by. Since the group is
/// finite and discrete its Baire and Borel sigma-algebras are both the full
/// powerset, so no measurability bookkeeping is attached.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Throws Error(Mismatch) on a modulus below 1.
  explicit FinAbGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const noexcept { return moduli_; }
  std::size_t rank() const noexcept { return moduli_.size(); }
  std::size_t order() const noexcept { return order_; }
  /// Least common multiple of the moduli.
  std::int64_t exponent() const noexcept;
  bool is_trivial() const noexcept { return order_ == 1; }

  template <class Tag>
  bool contains(const Coordinates<Tag>& x) const;
  template <class Tag>
  void require(const Coordinates<Tag>& x) const;

  template <class Tag = ElementTag>
  Coordinates<Tag> at(std::size_t index) const;
  template <class Tag>
  std::size_t index_of(const Coordinates<Tag>& x) const;

  Element element(std::size_t index) const { return at<ElementTag>(index); }
  Character character(std::size_t index) const { return at<CharacterTag>(index); }
  std::vector<Element> elements() const;
  std::vector<Character> characters() const;

  template <class Tag = ElementTag>
  Coordinates<Tag> zero() const {
    return Coordinates<Tag>(std::vector<std::int64_t>(rank(), 0));
  }
  template <class Tag>
  Coordinates<Tag> add(const Coordinates<Tag>& a, const Coordinates<Tag>& b) const;
  template <class Tag>
  Coordinates<Tag> neg(const Coordinates<Tag>& a) const;
  template <class Tag>
  Coordinates<Tag> sub(const Coordinates<Tag>& a, const Coordinates<Tag>& b) const {
    return add(a, neg(b));
  }

  /// K1 x K2 with the factors of K1 first.
  static FinAbGroup product(const FinAbGroup& lhs, const FinAbGroup& rhs);

  std::string to_string() const;

  friend bool operator==(const FinAbGroup& lhs, const FinAbGroup& rhs) {
    return lhs.moduli_ == rhs.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t order_ = 1;
};

/// The dual group, represented on the same moduli; a character b acts by
/// the pairing below.
FinAbGroup dual_group(const FinAbGroup& group);

/// <b, a> = sum_i a_i b_i / n_i mod 1. Throws Error(Mismatch) when either
/// vector does not belong to the group.
Circle pairing(const FinAbGroup& group, const Character& character, const Element& element);

/// A total function from the characters of `group` to the circle, indexed in
/// lexicographic character order.
struct CharacterTable {
  FinAbGroup group;
  std::vector<Circle> values;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// First pair (i, j), in lexicographic order of (i, j), with
/// values[i + j] != values[i] + values[j]; nullopt when the table is additive.
std::optional<std::pair<std::size_t, std::size_t>> first_additivity_violation(
    const FinAbGroup& group, std::span<const Circle> values);

/// iota(k) = (<b, k>)_b, always an additive table.
CharacterTable iota_embed(const FinAbGroup& group, const Element& element);

/// Inverse of iota_embed. The coordinate a_i is read off the value on the
/// i-th dual generator, then the whole table is checked against iota of the
/// result. Throws TorsionViolationError when a generator value is not
/// n_i-torsion and NotAdditiveError when the table is otherwise not additive.
Element element_from_character_table(const CharacterTable& table);

std::string to_string(const std::vector<std::int64_t>& coords);

// ---- template definitions --------------------------------------------------

template <class Tag>
bool FinAbGroup::contains(const Coordinates<Tag>& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= moduli_[i]) return false;
  }
  return true;
}

template <class Tag>
void FinAbGroup::require(const Coordinates<Tag>& x) const {
  if (!contains(x)) {
    throw Error(ErrorKind::Mismatch, cobound::to_string(x.coords) + " is not in " + to_string());
  }
}

template <class Tag>
Coordinates<Tag> FinAbGroup::at(std::size_t index) const {
  std::vector<std::int64_t> coords(rank());
  for (std::size_t i = rank(); i-- > 0;) {
    auto n = static_cast<std::size_t>(moduli_[i]);
    coords[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return Coordinates<Tag>(std::move(coords));
}

template <class Tag>
std::size_t FinAbGroup::index_of(const Coordinates<Tag>& x) const {
  require(x);
  std::size_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    index = index * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(x.coords[i]);
  }
  return index;
}

template <class Tag>
Coordinates<Tag> FinAbGroup::add(const Coordinates<Tag>& a, const Coordinates<Tag>& b) const {
  require(a);
  require(b);
  Coordinates<Tag> out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
  return out;
}

template <class Tag>
Coordinates<Tag> FinAbGroup::neg(const Coordinates<Tag>& a) const {
  require(a);
  Coordinates<Tag> out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = (moduli_[i] - a.coords[i]) % moduli_[i];
  return out;
}

}  // namespace cobound
