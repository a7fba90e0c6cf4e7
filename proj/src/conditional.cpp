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

#include "cobound/conditional.hpp"

namespace cobound {

namespace {

template <class V>
void require_same_base(const Cond<V>& lhs, const Cond<V>& rhs) {
  if (!same_algebra(lhs.base, rhs.base) || lhs.size() != rhs.size()) {
    throw Error(ErrorKind::Mismatch, "conditional elements over different bases");
  }
}

}  // namespace

CondCircle cond_group_op(CondOp op, const CondCircle& lhs, const CondCircle& rhs) {
  CondCircle out{lhs.base, lhs.values};
  if (op == CondOp::Neg) {
    for (auto& v : out.values) v = -v;
    return out;
  }
  require_same_base(lhs, rhs);
  for (std::size_t x = 0; x < out.size(); ++x) {
    out.values[x] = op == CondOp::Add ? lhs.values[x] + rhs.values[x] : lhs.values[x] - rhs.values[x];
  }
  return out;
}

CondK cond_group_op(const FinAbGroup& group, CondOp op, const CondK& lhs, const CondK& rhs) {
  CondK out{lhs.base, lhs.values};
  if (op == CondOp::Neg) {
    for (auto& v : out.values) v = group.neg(v);
    return out;
  }
  require_same_base(lhs, rhs);
  for (std::size_t x = 0; x < out.size(); ++x) {
    out.values[x] = op == CondOp::Add ? group.add(lhs.values[x], rhs.values[x])
                                      : group.sub(lhs.values[x], rhs.values[x]);
  }
  return out;
}

CondCircle cond_character(const FinAbGroup& group, const Character& character, const CondK& rho) {
  CondCircle out{rho.base, {}};
  out.values.reserve(rho.size());
  for (const auto& k : rho.values) out.values.push_back(pairing(group, character, k));
  return out;
}

CondK cond_pair(const FinAbGroup& first, const FinAbGroup& second, const CondK& lhs, const CondK& rhs) {
  require_same_base(lhs, rhs);
  CondK out{lhs.base, {}};
  for (std::size_t x = 0; x < lhs.size(); ++x) {
    first.require(lhs.values[x]);
    second.require(rhs.values[x]);
    auto coords = lhs.values[x].coords;
    coords.insert(coords.end(), rhs.values[x].coords.begin(), rhs.values[x].coords.end());
    out.values.emplace_back(std::move(coords));
  }
  return out;
}

std::pair<CondK, CondK> cond_unpair(const FinAbGroup& first, const FinAbGroup& second, const CondK& joined) {
  auto product = FinAbGroup::product(first, second);
  CondK lhs{joined.base, {}};
  CondK rhs{joined.base, {}};
  const auto split = static_cast<std::ptrdiff_t>(first.rank());
  for (const auto& v : joined.values) {
    product.require(v);
    lhs.values.emplace_back(std::vector<std::int64_t>(v.coords.begin(), v.coords.begin() + split));
    rhs.values.emplace_back(std::vector<std::int64_t>(v.coords.begin() + split, v.coords.end()));
  }
  return {std::move(lhs), std::move(rhs)};
}

// ---- actions ---------------------------------------------------------------

GroupAction::GroupAction(FiniteGroup group, AlgebraPtr base, std::vector<AbstractMap> maps)
    : group_(std::move(group)), base_(std::move(base)), maps_(std::move(maps)) {
  if (maps_.size() != group_.order()) {
    throw Error(ErrorKind::Mismatch, "action must give one map per group element");
  }
  for (std::size_t g = 0; g < maps_.size(); ++g) {
    const auto& m = maps_[g];
    if (!same_algebra(m.source(), base_) || !same_algebra(m.target(), base_)) {
      throw Error(ErrorKind::Mismatch, "T^" + group_.id(g) + " is not an endomorphism of the base");
    }
    if (!m.is_bijective()) throw Error(ErrorKind::Mismatch, "T^" + group_.id(g) + " is not invertible");
  }
  if (!(maps_[group_.identity()] == identity_map(base_))) {
    throw Error(ErrorKind::Mismatch, "T^" + group_.id(group_.identity()) + " is not the identity");
  }
  for (std::size_t a = 0; a < group_.order(); ++a) {
    for (std::size_t b = 0; b < group_.order(); ++b) {
      if (!(maps_[group_.mul(a, b)].atom_map() == compose_maps(maps_[a], maps_[b]).atom_map())) {
        throw Error(ErrorKind::Mismatch, "T^(" + group_.id(a) + "*" + group_.id(b) + ") differs from T^" +
                                             group_.id(a) + " o T^" + group_.id(b));
      }
    }
  }
}

OrbitDecomposition orbits_and_stabilizers(const GroupAction& action) {
  const std::size_t n = action.atoms();
  const std::size_t none = n;
  OrbitDecomposition out;
  out.orbit_of.assign(n, none);
  out.stabilizers.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      if (action.apply(g, x) == x) out.stabilizers[x].push_back(g);
    }
    if (out.orbit_of[x] != none) continue;
    std::vector<std::size_t> orbit;
    std::vector<bool> seen(n, false);
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      std::size_t y = action.apply(g, x);
      if (!seen[y]) {
        seen[y] = true;
        out.orbit_of[y] = out.orbits.size();
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (seen[y]) orbit.push_back(y);
    }
    out.representatives.push_back(x);
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

CondCircle retract_w(const OrbitDecomposition& orbits, const CondCircle& theta) {
  if (orbits.orbit_of.size() != theta.size()) {
    throw Error(ErrorKind::Mismatch, "retract_w: orbit data does not match the base");
  }
  CondCircle out{theta.base, theta.values};
  for (std::size_t x = 0; x < theta.size(); ++x) {
    out.values[x] = theta.values[orbits.representatives[orbits.orbit_of[x]]];
  }
  return out;
}

CondCircle retract_w(const GroupAction& action, const CondCircle& theta) {
  if (!same_algebra(action.base(), theta.base)) {
    throw Error(ErrorKind::Mismatch, "retract_w: base differs from the action's");
  }
  return retract_w(orbits_and_stabilizers(action), theta);
}

CondK conditional_reconstruct(const AlgebraPtr& base, const FinAbGroup& group,
                              const std::vector<CondCircle>& family) {
  if (family.size() != group.order()) {
    throw Error(ErrorKind::Mismatch, "family must give one conditional element per character");
  }
  for (const auto& member : family) {
    if (!same_algebra(member.base, base) || member.size() != base->size()) {
      throw Error(ErrorKind::Mismatch, "family member over a different base");
    }
  }
  CondK out{base, {}};
  std::vector<Circle> column(group.order());
  for (std::size_t x = 0; x < base->size(); ++x) {
    for (std::size_t c = 0; c < family.size(); ++c) column[c] = family[c].values[x];
    if (auto bad = first_additivity_violation(group, column)) {
      throw NotAdditiveError(x, bad->first, bad->second,
                             "family is not additive at atom '" + base->id(x) + "' for characters " +
                                 to_string(group.character(bad->first).coords) + " and " +
                                 to_string(group.character(bad->second).coords));
    }
    out.values.push_back(element_from_character_table(CharacterTable{group, column}));
  }
  return out;
}

}  // namespace cobound
