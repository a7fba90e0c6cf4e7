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
#include <string>
#include <utility>
#include <vector>

#include "cobound/abgroup.hpp"
#include "cobound/balg.hpp"
#include "cobound/circle.hpp"
#include "cobound/error.hpp"
#include "cobound/group.hpp"

namespace cobound {

/// A conditional element of V over a finite measure algebra: one value per
/// atom. Values are total, so there is no "almost everywhere" qualifier;
/// the null sets were already removed when the algebra was formed.
template <class V>
struct Cond {
  AlgebraPtr base;
  std::vector<V> values;

  std::size_t size() const noexcept { return values.size(); }
  const V& operator[](std::size_t atom) const { return values.at(atom); }
  V& operator[](std::size_t atom) { return values.at(atom); }

  friend bool operator==(const Cond& lhs, const Cond& rhs) {
    return same_algebra(lhs.base, rhs.base) && lhs.values == rhs.values;
  }
};

using CondCircle = Cond<Circle>;
using CondK = Cond<Element>;

template <class V>
Cond<V> constant_cond(const AlgebraPtr& base, const V& value) {
  return Cond<V>{base, std::vector<V>(base->size(), value)};
}

/// (theta o T)(x) = theta(T(x)). T must be an endomorphism of theta's base.
template <class V>
Cond<V> cond_compose(const Cond<V>& theta, const AbstractMap& map) {
  if (!same_algebra(map.source(), theta.base) || !same_algebra(map.target(), theta.base)) {
    throw Error(ErrorKind::Mismatch, "cond_compose: map is not an endomorphism of the base");
  }
  Cond<V> out{theta.base, {}};
  out.values.reserve(theta.size());
  for (std::size_t x = 0; x < theta.size(); ++x) out.values.push_back(theta.values[map(x)]);
  return out;
}

enum class CondOp { Add, Sub, Neg };

/// Pointwise group operations. `Neg` ignores `rhs`.
CondCircle cond_group_op(CondOp op, const CondCircle& lhs, const CondCircle& rhs = {});
CondK cond_group_op(const FinAbGroup& group, CondOp op, const CondK& lhs, const CondK& rhs = {});

/// Pointwise pairing <k^, rho>.
CondCircle cond_character(const FinAbGroup& group, const Character& character, const CondK& rho);

/// Conditional elements of K1 x K2 are exactly pairs of conditional
/// elements of K1 and K2.
CondK cond_pair(const FinAbGroup& first, const FinAbGroup& second, const CondK& lhs, const CondK& rhs);
std::pair<CondK, CondK> cond_unpair(const FinAbGroup& first, const FinAbGroup& second, const CondK& joined);

/// An action of a finite group on a measure algebra by automorphisms,
/// gamma -> T^gamma. Measure preservation is not required.
class GroupAction {
 public:
  /// Validates that every map is a bijective endomorphism of `base`, that
  /// T^e is the identity and that T^{ab} = T^a o T^b. Throws
  /// Error(Mismatch) describing the first failure.
  GroupAction(FiniteGroup group, AlgebraPtr base, std::vector<AbstractMap> maps);

  const FiniteGroup& group() const noexcept { return group_; }
  const AlgebraPtr& base() const noexcept { return base_; }
  std::size_t atoms() const noexcept { return base_->size(); }
  const AbstractMap& map(std::size_t gamma) const { return maps_.at(gamma); }
  /// T^gamma(x)
  std::size_t apply(std::size_t gamma, std::size_t atom) const { return maps_[gamma](atom); }

 private:
  FiniteGroup group_;
  AlgebraPtr base_;
  std::vector<AbstractMap> maps_;
};

struct OrbitDecomposition {
  /// Orbits in order of their lowest atom; each orbit lists atoms in
  /// increasing order, so `orbits[i].front()` is the representative.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> representatives;
  /// Atom -> index into `orbits`.
  std::vector<std::size_t> orbit_of;
  /// Atom -> every gamma (in group order) with T^gamma(x) = x.
  std::vector<std::vector<std::size_t>> stabilizers;
};

OrbitDecomposition orbits_and_stabilizers(const GroupAction& action);

/// The retract w onto the invariant subgroup: evaluation at the orbit
/// representative. Any retract works for the decision pipeline; this one is
/// the canonical choice and the witnesses it yields depend on it.
CondCircle retract_w(const GroupAction& action, const CondCircle& theta);
CondCircle retract_w(const OrbitDecomposition& orbits, const CondCircle& theta);

/// theta o T^gamma = theta for every gamma.
template <class V>
bool is_invariant(const GroupAction& action, const Cond<V>& theta) {
  if (!same_algebra(action.base(), theta.base)) {
    throw Error(ErrorKind::Mismatch, "is_invariant: base differs from the action's");
  }
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    for (std::size_t x = 0; x < theta.size(); ++x) {
      if (!(theta.values[action.apply(g, x)] == theta.values[x])) return false;
    }
  }
  return true;
}

/// Finds the unique F in Cond(K) with <k^, F> = family[k^] for every
/// character (family indexed in lexicographic character order). Throws
/// NotAdditiveError carrying the first atom, and the first character pair
/// there, at which the family fails to be additive.
CondK conditional_reconstruct(const AlgebraPtr& base, const FinAbGroup& group,
                              const std::vector<CondCircle>& family);

/// Restricts the codomain of `s` to the subset described by `in_subset`.
/// Throws NotSupportedError at the first atom whose value escapes it.
template <class V, class Predicate>
Cond<V> corestrict(const Cond<V>& s, Predicate in_subset) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!in_subset(s.values[x])) {
      throw NotSupportedError(x, "value at atom '" + s.base->id(x) + "' lies outside the subset");
    }
  }
  return s;
}

}  // namespace cobound
