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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cobound/rational.hpp"

namespace cobound {

/// A subset of the atoms of a finite atomic Boolean algebra, i.e. an element
/// of the algebra.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t universe) : bits_(universe, false) {}
  AtomSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static AtomSet full(std::size_t universe);
  static AtomSet from_mask(std::size_t universe, unsigned long long mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(std::size_t atom) const { return bits_.at(atom); }
  void insert(std::size_t atom) { bits_.at(atom) = true; }
  void erase(std::size_t atom) { bits_.at(atom) = false; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  std::vector<std::size_t> members() const;

  AtomSet operator|(const AtomSet& rhs) const;
  AtomSet operator&(const AtomSet& rhs) const;
  AtomSet operator~() const;
  AtomSet operator-(const AtomSet& rhs) const { return *this & ~rhs; }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;
  friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

 private:
  std::vector<bool> bits_;
};

struct WeightedAtom {
  std::string id;
  Rational weight;

  friend bool operator==(const WeightedAtom&, const WeightedAtom&) = default;
};

/// A finite measure space given by its atoms. Zero weights are allowed; they
/// are the null sets that the measure algebra quotients away.
class ConcreteSpace {
 public:
  ConcreteSpace() = default;
  /// Throws Error(Mismatch) on empty or duplicate ids and on negative weights.
  explicit ConcreteSpace(std::vector<WeightedAtom> atoms);

  std::size_t size() const noexcept { return atoms_.size(); }
  const std::vector<WeightedAtom>& atoms() const noexcept { return atoms_; }
  const WeightedAtom& atom(std::size_t i) const { return atoms_.at(i); }
  std::optional<std::size_t> index_of(const std::string& id) const;

 private:
  std::vector<WeightedAtom> atoms_;
  std::map<std::string, std::size_t> index_;
};

/// Finite atomic Boolean algebra with ordered, named atoms.
///
/// A measure algebra carries a strictly positive weight per atom. Algebras
/// produced by generating a subalgebra carry no weights; `has_weights()`
/// distinguishes the two.
class MeasureAlgebra {
 public:
  MeasureAlgebra() = default;

  /// Throws Error(Mismatch) on bad ids or non-positive weights.
  static MeasureAlgebra weighted(std::vector<WeightedAtom> atoms);
  static MeasureAlgebra unweighted(std::vector<std::string> ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::optional<std::size_t> index_of(const std::string& id) const;

  bool has_weights() const noexcept { return weights_.has_value(); }
  const Rational& weight(std::size_t i) const;
  Rational measure(const AtomSet& set) const;

  AtomSet top() const { return AtomSet::full(size()); }
  AtomSet bottom() const { return AtomSet(size()); }

  friend bool operator==(const MeasureAlgebra& lhs, const MeasureAlgebra& rhs) {
    return lhs.ids_ == rhs.ids_ && lhs.weights_ == rhs.weights_;
  }

 private:
  std::vector<std::string> ids_;
  std::optional<std::vector<Rational>> weights_;
  std::map<std::string, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const MeasureAlgebra>;

bool same_algebra(const AlgebraPtr& lhs, const AlgebraPtr& rhs);

/// The measure algebra of a concrete space together with the inclusion
/// pullback from concrete atom sets to surviving atoms.
struct NullQuotient {
  AlgebraPtr algebra;
  /// Concrete atom index -> quotient atom index, empty for null atoms.
  std::vector<std::optional<std::size_t>> survivor;

  AtomSet pullback(const AtomSet& concrete) const;
  bool is_null(std::size_t concrete_atom) const { return !survivor.at(concrete_atom).has_value(); }
};

/// Removes the zero-weight atoms. Throws Error(AllNull) when nothing is
/// left; every cocycle over such a space is trivially a coboundary, and
/// callers are expected to short-circuit on that error.
NullQuotient quotient_nulls(const ConcreteSpace& space);

/// Abstract measurable map between finite atomic algebras, stored as its
/// forward atom map. The pullback E -> atom_map^{-1}(E) is the Boolean
/// homomorphism the map stands for.
class AbstractMap {
 public:
  /// Throws Error(Mismatch) unless `atom_map` is total and lands in target.
  AbstractMap(AlgebraPtr source, AlgebraPtr target, std::vector<std::size_t> atom_map);

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  const std::vector<std::size_t>& atom_map() const noexcept { return atom_map_; }
  std::size_t operator()(std::size_t atom) const { return atom_map_.at(atom); }

  /// f*(E) for a subset E of the target.
  AtomSet pullback(const AtomSet& target_set) const;
  bool is_bijective() const;

  friend bool operator==(const AbstractMap& lhs, const AbstractMap& rhs) {
    return same_algebra(lhs.source_, rhs.source_) && same_algebra(lhs.target_, rhs.target_) &&
           lhs.atom_map_ == rhs.atom_map_;
  }

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<std::size_t> atom_map_;
};

AbstractMap identity_map(const AlgebraPtr& algebra);

/// Builds the map from an id -> id table. Throws Error(UnknownAtom) for ids
/// outside either algebra and Error(Partial) for a missing source atom.
AbstractMap hom_from_atom_map(const AlgebraPtr& source, const AlgebraPtr& target,
                              const std::map<std::string, std::string>& mapping);

/// g after f. Pullbacks compose contravariantly: (g o f)* = f* o g*.
AbstractMap compose_maps(const AbstractMap& g, const AbstractMap& f);

/// Throws Error(NotInvertible) unless the atom map is a bijection.
AbstractMap invert_map(const AbstractMap& f);

/// True iff every target atom weighs exactly the total weight of its
/// preimage. Both algebras must carry weights.
bool is_measure_preserving(const AbstractMap& f);

/// Abstraction [f] of a concrete atom map between two spaces, given their
/// null quotients. Null source atoms are dropped; a positive atom landing on
/// a null atom throws Error(NullImage).
AbstractMap abstract_of_concrete(const NullQuotient& source, const NullQuotient& target,
                                 std::span<const std::size_t> concrete_map);
AbstractMap abstract_of_concrete(const ConcreteSpace& source, const ConcreteSpace& target,
                                 const std::map<std::string, std::string>& mapping);

/// Generator data for a Boolean homomorphism from the algebra generated by
/// `generators[i].first` (subsets of `domain`) into `codomain`.
struct PartialHom {
  AlgebraPtr domain;
  AlgebraPtr codomain;
  std::vector<std::pair<AtomSet, AtomSet>> generators;
};

/// The unique Boolean homomorphism on the subalgebra generated by the
/// generators. Its atoms are the non-empty cells of the partition the
/// generators induce, ordered by their lowest domain atom.
class BooleanExtension {
 public:
  BooleanExtension(PartialHom data, std::vector<AtomSet> cells, std::vector<std::size_t> forward);

  const std::vector<AtomSet>& cells() const noexcept { return cells_; }
  /// Codomain atom -> index of the cell whose image contains it.
  const std::vector<std::size_t>& forward() const noexcept { return forward_; }
  AtomSet cell_image(std::size_t cell) const;

  bool in_generated_algebra(const AtomSet& element) const;
  /// Image of an element of the generated algebra; throws Error(NotSupported)
  /// for subsets outside it.
  AtomSet apply(const AtomSet& element) const;

  /// The same homomorphism as an abstract map from the codomain onto the
  /// (unweighted) generated algebra.
  AbstractMap as_abstract_map() const;

 private:
  PartialHom data_;
  std::vector<AtomSet> cells_;
  std::vector<std::size_t> forward_;
};

/// Throws InconsistentError carrying the violated identity when the data
/// does not come from any Boolean homomorphism.
BooleanExtension extend_boolean_hom(const PartialHom& partial);

}  // namespace cobound
