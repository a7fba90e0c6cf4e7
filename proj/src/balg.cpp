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

#include "cobound/balg.hpp"

#include <algorithm>

#include "cobound/error.hpp"

namespace cobound {

// ---- AtomSet ---------------------------------------------------------------

AtomSet::AtomSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : bits_(universe, false) {
  for (std::size_t m : members) insert(m);
}

AtomSet AtomSet::full(std::size_t universe) {
  AtomSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

AtomSet AtomSet::from_mask(std::size_t universe, unsigned long long mask) {
  AtomSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.bits_[i] = ((mask >> i) & 1ULL) != 0;
  return s;
}

std::size_t AtomSet::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> AtomSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(i);
  }
  return out;
}

AtomSet AtomSet::operator|(const AtomSet& rhs) const {
  if (universe() != rhs.universe()) throw Error(ErrorKind::Mismatch, "atom sets over different algebras");
  AtomSet out(universe());
  for (std::size_t i = 0; i < universe(); ++i) out.bits_[i] = bits_[i] || rhs.bits_[i];
  return out;
}

AtomSet AtomSet::operator&(const AtomSet& rhs) const {
  if (universe() != rhs.universe()) throw Error(ErrorKind::Mismatch, "atom sets over different algebras");
  AtomSet out(universe());
  for (std::size_t i = 0; i < universe(); ++i) out.bits_[i] = bits_[i] && rhs.bits_[i];
  return out;
}

AtomSet AtomSet::operator~() const {
  AtomSet out(universe());
  for (std::size_t i = 0; i < universe(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

// ---- spaces and algebras ---------------------------------------------------

namespace {

std::map<std::string, std::size_t> build_index(const std::vector<std::string>& ids) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i].empty()) throw Error(ErrorKind::Mismatch, "atom ids must be non-empty");
    if (!index.emplace(ids[i], i).second) {
      throw Error(ErrorKind::Mismatch, "duplicate atom id '" + ids[i] + "'");
    }
  }
  return index;
}

std::optional<std::size_t> lookup(const std::map<std::string, std::size_t>& index,
                                  const std::string& id) {
  auto it = index.find(id);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

}  // namespace

ConcreteSpace::ConcreteSpace(std::vector<WeightedAtom> atoms) : atoms_(std::move(atoms)) {
  std::vector<std::string> ids;
  for (const auto& a : atoms_) {
    if (a.weight < Rational(0)) {
      throw Error(ErrorKind::Mismatch, "atom '" + a.id + "' has negative weight");
    }
    ids.push_back(a.id);
  }
  index_ = build_index(ids);
}

std::optional<std::size_t> ConcreteSpace::index_of(const std::string& id) const {
  return lookup(index_, id);
}

MeasureAlgebra MeasureAlgebra::weighted(std::vector<WeightedAtom> atoms) {
  MeasureAlgebra alg;
  std::vector<Rational> weights;
  for (auto& a : atoms) {
    if (a.weight <= Rational(0)) {
      throw Error(ErrorKind::Mismatch, "measure algebra atom '" + a.id + "' must have positive weight");
    }
    alg.ids_.push_back(std::move(a.id));
    weights.push_back(a.weight);
  }
  alg.weights_ = std::move(weights);
  alg.index_ = build_index(alg.ids_);
  return alg;
}

MeasureAlgebra MeasureAlgebra::unweighted(std::vector<std::string> ids) {
  MeasureAlgebra alg;
  alg.ids_ = std::move(ids);
  alg.index_ = build_index(alg.ids_);
  return alg;
}

std::optional<std::size_t> MeasureAlgebra::index_of(const std::string& id) const {
  return lookup(index_, id);
}

const Rational& MeasureAlgebra::weight(std::size_t i) const {
  if (!weights_) throw Error(ErrorKind::Mismatch, "algebra carries no weights");
  return weights_->at(i);
}

Rational MeasureAlgebra::measure(const AtomSet& set) const {
  if (set.universe() != size()) throw Error(ErrorKind::Mismatch, "atom set over a different algebra");
  Rational total;
  for (std::size_t i : set.members()) total += weight(i);
  return total;
}

bool same_algebra(const AlgebraPtr& lhs, const AlgebraPtr& rhs) {
  if (lhs == rhs) return true;
  if (!lhs || !rhs) return false;
  return *lhs == *rhs;
}

AtomSet NullQuotient::pullback(const AtomSet& concrete) const {
  if (concrete.universe() != survivor.size()) {
    throw Error(ErrorKind::Mismatch, "atom set over a different concrete space");
  }
  AtomSet out(algebra->size());
  for (std::size_t i = 0; i < survivor.size(); ++i) {
    if (survivor[i] && concrete.contains(i)) out.insert(*survivor[i]);
  }
  return out;
}

NullQuotient quotient_nulls(const ConcreteSpace& space) {
  NullQuotient q;
  std::vector<WeightedAtom> kept;
  q.survivor.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& a = space.atom(i);
    if (!a.weight.is_zero()) {
      q.survivor[i] = kept.size();
      kept.push_back(a);
    }
  }
  if (kept.empty()) throw Error(ErrorKind::AllNull, "every atom of the space is null");
  q.algebra = std::make_shared<const MeasureAlgebra>(MeasureAlgebra::weighted(std::move(kept)));
  return q;
}

// ---- abstract maps ---------------------------------------------------------

AbstractMap::AbstractMap(AlgebraPtr source, AlgebraPtr target, std::vector<std::size_t> atom_map)
    : source_(std::move(source)), target_(std::move(target)), atom_map_(std::move(atom_map)) {
  if (!source_ || !target_) throw Error(ErrorKind::Mismatch, "abstract map needs both algebras");
  if (atom_map_.size() != source_->size()) {
    throw Error(ErrorKind::Mismatch, "atom map is not total on the source algebra");
  }
  for (std::size_t image : atom_map_) {
    if (image >= target_->size()) throw Error(ErrorKind::Mismatch, "atom map leaves the target algebra");
  }
}

AtomSet AbstractMap::pullback(const AtomSet& target_set) const {
  if (target_set.universe() != target_->size()) {
    throw Error(ErrorKind::Mismatch, "pullback of a set outside the target algebra");
  }
  AtomSet out(source_->size());
  for (std::size_t a = 0; a < atom_map_.size(); ++a) {
    if (target_set.contains(atom_map_[a])) out.insert(a);
  }
  return out;
}

bool AbstractMap::is_bijective() const {
  if (source_->size() != target_->size()) return false;
  std::vector<bool> hit(target_->size(), false);
  for (std::size_t image : atom_map_) {
    if (hit[image]) return false;
    hit[image] = true;
  }
  return true;
}

AbstractMap identity_map(const AlgebraPtr& algebra) {
  std::vector<std::size_t> map(algebra->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return AbstractMap(algebra, algebra, std::move(map));
}

AbstractMap hom_from_atom_map(const AlgebraPtr& source, const AlgebraPtr& target,
                              const std::map<std::string, std::string>& mapping) {
  std::vector<std::optional<std::size_t>> images(source->size());
  for (const auto& [from, to] : mapping) {
    auto s = source->index_of(from);
    if (!s) throw Error(ErrorKind::UnknownAtom, "'" + from + "' is not a source atom");
    auto t = target->index_of(to);
    if (!t) throw Error(ErrorKind::UnknownAtom, "'" + to + "' is not a target atom");
    images[*s] = *t;
  }
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw Error(ErrorKind::Partial, "no image given for atom '" + source->id(i) + "'");
    map.push_back(*images[i]);
  }
  return AbstractMap(source, target, std::move(map));
}

AbstractMap compose_maps(const AbstractMap& g, const AbstractMap& f) {
  if (!same_algebra(f.target(), g.source())) {
    throw Error(ErrorKind::Mismatch, "compose_maps: target of f is not the source of g");
  }
  std::vector<std::size_t> map(f.atom_map().size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return AbstractMap(f.source(), g.target(), std::move(map));
}

AbstractMap invert_map(const AbstractMap& f) {
  if (!f.is_bijective()) throw Error(ErrorKind::NotInvertible, "atom map is not a bijection");
  std::vector<std::size_t> inverse(f.atom_map().size());
  for (std::size_t a = 0; a < inverse.size(); ++a) inverse[f(a)] = a;
  return AbstractMap(f.target(), f.source(), std::move(inverse));
}

bool is_measure_preserving(const AbstractMap& f) {
  const auto& src = *f.source();
  const auto& dst = *f.target();
  if (!src.has_weights() || !dst.has_weights()) {
    throw Error(ErrorKind::Mismatch, "measure preservation needs weighted algebras");
  }
  std::vector<Rational> pushed(dst.size());
  for (std::size_t a = 0; a < src.size(); ++a) pushed[f(a)] += src.weight(a);
  for (std::size_t b = 0; b < dst.size(); ++b) {
    if (pushed[b] != dst.weight(b)) return false;
  }
  return true;
}

AbstractMap abstract_of_concrete(const NullQuotient& source, const NullQuotient& target,
                                 std::span<const std::size_t> concrete_map) {
  if (concrete_map.size() != source.survivor.size()) {
    throw Error(ErrorKind::Partial, "concrete map is not total on the source space");
  }
  std::vector<std::size_t> map(source.algebra->size());
  for (std::size_t a = 0; a < concrete_map.size(); ++a) {
    if (!source.survivor[a]) continue;
    std::size_t image = concrete_map[a];
    if (image >= target.survivor.size()) {
      throw Error(ErrorKind::UnknownAtom, "concrete map leaves the target space");
    }
    if (!target.survivor[image]) {
      throw Error(ErrorKind::NullImage, "positive atom '" + source.algebra->id(*source.survivor[a]) +
                                            "' is sent to a null atom");
    }
    map[*source.survivor[a]] = *target.survivor[image];
  }
  return AbstractMap(source.algebra, target.algebra, std::move(map));
}

AbstractMap abstract_of_concrete(const ConcreteSpace& source, const ConcreteSpace& target,
                                 const std::map<std::string, std::string>& mapping) {
  std::vector<std::optional<std::size_t>> images(source.size());
  for (const auto& [from, to] : mapping) {
    auto s = source.index_of(from);
    if (!s) throw Error(ErrorKind::UnknownAtom, "'" + from + "' is not a source atom");
    auto t = target.index_of(to);
    if (!t) throw Error(ErrorKind::UnknownAtom, "'" + to + "' is not a target atom");
    images[*s] = *t;
  }
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw Error(ErrorKind::Partial, "no image given for atom '" + source.atom(i).id + "'");
    map.push_back(*images[i]);
  }
  return abstract_of_concrete(quotient_nulls(source), quotient_nulls(target), map);
}

// ---- Boolean extension -----------------------------------------------------

BooleanExtension::BooleanExtension(PartialHom data, std::vector<AtomSet> cells,
                                   std::vector<std::size_t> forward)
    : data_(std::move(data)), cells_(std::move(cells)), forward_(std::move(forward)) {}

AtomSet BooleanExtension::cell_image(std::size_t cell) const {
  AtomSet out(data_.codomain->size());
  for (std::size_t x = 0; x < forward_.size(); ++x) {
    if (forward_[x] == cell) out.insert(x);
  }
  return out;
}

bool BooleanExtension::in_generated_algebra(const AtomSet& element) const {
  if (element.universe() != data_.domain->size()) return false;
  for (const auto& cell : cells_) {
    auto overlap = (cell & element).count();
    if (overlap != 0 && overlap != cell.count()) return false;
  }
  return true;
}

AtomSet BooleanExtension::apply(const AtomSet& element) const {
  if (!in_generated_algebra(element)) {
    throw Error(ErrorKind::NotSupported, "element is outside the generated subalgebra");
  }
  AtomSet out(data_.codomain->size());
  for (std::size_t x = 0; x < forward_.size(); ++x) {
    if (!(cells_[forward_[x]] & element).empty()) out.insert(x);
  }
  return out;
}

AbstractMap BooleanExtension::as_abstract_map() const {
  std::vector<std::string> ids;
  for (const auto& cell : cells_) {
    std::string id = "{";
    bool first = true;
    for (std::size_t y : cell.members()) {
      if (!first) id += ",";
      id += data_.domain->id(y);
      first = false;
    }
    ids.push_back(id + "}");
  }
  auto generated = std::make_shared<const MeasureAlgebra>(MeasureAlgebra::unweighted(std::move(ids)));
  return AbstractMap(data_.codomain, generated, forward_);
}

BooleanExtension extend_boolean_hom(const PartialHom& partial) {
  const auto& domain = *partial.domain;
  const auto& codomain = *partial.codomain;
  for (const auto& [element, image] : partial.generators) {
    if (element.universe() != domain.size() || image.universe() != codomain.size()) {
      throw Error(ErrorKind::Mismatch, "generator is not a subset of the expected algebra");
    }
  }
  auto signs_of = [&](std::size_t atom, bool domain_side) {
    std::vector<bool> signs;
    for (const auto& [element, image] : partial.generators) {
      signs.push_back(domain_side ? element.contains(atom) : image.contains(atom));
    }
    return signs;
  };

  // Each non-empty sign pattern over the domain is one atom of the
  // generated subalgebra.
  std::vector<std::vector<bool>> patterns;
  std::vector<AtomSet> cells;
  for (std::size_t y = 0; y < domain.size(); ++y) {
    auto signs = signs_of(y, true);
    auto it = std::find(patterns.begin(), patterns.end(), signs);
    if (it == patterns.end()) {
      patterns.push_back(signs);
      cells.emplace_back(domain.size());
      cells.back().insert(y);
    } else {
      cells[static_cast<std::size_t>(it - patterns.begin())].insert(y);
    }
  }

  // A homomorphism sends every empty meet to 0, so each codomain atom must
  // fall in the image of exactly one realized pattern.
  std::vector<std::size_t> forward(codomain.size());
  for (std::size_t x = 0; x < codomain.size(); ++x) {
    auto signs = signs_of(x, false);
    auto it = std::find(patterns.begin(), patterns.end(), signs);
    if (it == patterns.end()) {
      throw InconsistentError(signs, x,
                              "codomain atom '" + codomain.id(x) +
                                  "' lies in the image of a meet of generators that is empty");
    }
    forward[x] = static_cast<std::size_t>(it - patterns.begin());
  }
  return BooleanExtension(partial, std::move(cells), std::move(forward));
}

}  // namespace cobound
