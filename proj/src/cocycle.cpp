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

#include "cobound/cocycle.hpp"

#include <string>

namespace cobound {

namespace {

void require_shape(const Cocycle& cocycle) {
  const auto& action = cocycle.action;
  if (cocycle.rho.size() != action.group().order()) {
    throw Error(ErrorKind::Mismatch, "cocycle must give one conditional element per group element");
  }
  for (const auto& r : cocycle.rho) {
    if (!same_algebra(r.base, action.base()) || r.size() != action.atoms()) {
      throw Error(ErrorKind::Mismatch, "cocycle value over a different base");
    }
    for (const auto& v : r.values) cocycle.group.require(v);
  }
}

void require_circle_shape(const GroupAction& action, const std::vector<CondCircle>& c) {
  if (c.size() != action.group().order()) {
    throw Error(ErrorKind::Mismatch, "circle cocycle must give one element per group element");
  }
  for (const auto& r : c) {
    if (!same_algebra(r.base, action.base()) || r.size() != action.atoms()) {
      throw Error(ErrorKind::Mismatch, "circle cocycle value over a different base");
    }
  }
}

[[noreturn]] void internal(const std::string& what) {
  throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace

std::optional<CocycleViolation> validate_cocycle(const Cocycle& cocycle) {
  require_shape(cocycle);
  const auto& action = cocycle.action;
  const auto& group = action.group();
  const auto& K = cocycle.group;
  for (std::size_t a = 0; a < group.order(); ++a) {
    for (std::size_t b = 0; b < group.order(); ++b) {
      const auto& lhs = cocycle.rho[group.mul(a, b)];
      for (std::size_t x = 0; x < action.atoms(); ++x) {
        auto rhs = K.add(cocycle.rho[a][action.apply(b, x)], cocycle.rho[b][x]);
        if (lhs[x] != rhs) return CocycleViolation{a, b, x};
      }
    }
  }
  return std::nullopt;
}

Cocycle coboundary_from_potential(const GroupAction& action, const FinAbGroup& group, const CondK& potential) {
  if (!same_algebra(potential.base, action.base())) {
    throw Error(ErrorKind::Mismatch, "potential lives on a different base than the action");
  }
  for (const auto& v : potential.values) group.require(v);
  Cocycle out{action, group, {}};
  out.rho.reserve(action.group().order());
  for (std::size_t g = 0; g < action.group().order(); ++g) {
    out.rho.push_back(cond_group_op(group, CondOp::Sub, cond_compose(potential, action.map(g)), potential));
  }
  return out;
}

CircleSolution solve_circle_coboundary(const GroupAction& action, const std::vector<CondCircle>& c) {
  return solve_circle_coboundary(action, orbits_and_stabilizers(action), c);
}

CircleSolution solve_circle_coboundary(const GroupAction& action, const OrbitDecomposition& orbits,
                                       const std::vector<CondCircle>& c) {
  require_circle_shape(action, c);
  const auto& group = action.group();
  CondCircle alpha = constant_cond(action.base(), Circle::zero());
  std::vector<bool> assigned(action.atoms(), false);

  for (std::size_t x0 : orbits.representatives) {
    for (std::size_t g : orbits.stabilizers[x0]) {
      if (!c[g][x0].is_zero()) return Obstruction{g, x0};
    }
    // Transversal from the representative: the first gamma (in group order)
    // reaching each atom fixes its value.
    assigned[x0] = true;
    for (std::size_t g = 0; g < group.order(); ++g) {
      std::size_t y = action.apply(g, x0);
      if (!assigned[y]) {
        alpha[y] = c[g][x0];
        assigned[y] = true;
      }
    }
  }

  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t x = 0; x < action.atoms(); ++x) {
      if (alpha[action.apply(g, x)] - alpha[x] != c[g][x]) {
        internal("circle solution fails at (" + group.id(g) + ", " + action.base()->id(x) +
                 "); the input is not a cocycle");
      }
    }
  }
  return alpha;
}

CondCircle defect(const GroupAction& action, const CondCircle& alpha_first, const CondCircle& alpha_second,
                  const CondCircle& alpha_sum) {
  auto c = cond_group_op(CondOp::Sub, cond_group_op(CondOp::Sub, alpha_sum, alpha_first), alpha_second);
  if (!is_invariant(action, c)) internal("defect is not invariant under the action");
  return c;
}

Decision moore_schmidt_decide(const Cocycle& cocycle) {
  if (auto violation = validate_cocycle(cocycle)) {
    const auto& group = cocycle.action.group();
    throw Error(ErrorKind::InvalidCocycle,
                "cocycle equation fails at (" + group.id(violation->gamma1) + ", " +
                    group.id(violation->gamma2) + ", " + cocycle.action.base()->id(violation->atom) + ")");
  }
  const auto& action = cocycle.action;
  const auto& K = cocycle.group;
  const auto& base = action.base();
  const auto orbits = orbits_and_stabilizers(action);
  const auto characters = K.characters();

  // Per-character circle coboundaries <k^, rho_gamma> = alpha o T^gamma - alpha.
  Coboundary result;
  for (const auto& character : characters) {
    std::vector<CondCircle> circle_cocycle;
    circle_cocycle.reserve(cocycle.rho.size());
    for (const auto& r : cocycle.rho) circle_cocycle.push_back(cond_character(K, character, r));
    auto solution = solve_circle_coboundary(action, orbits, circle_cocycle);
    if (auto* obstruction = std::get_if<Obstruction>(&solution)) {
      return NotCoboundary{Certificate{character, obstruction->gamma, obstruction->atom}};
    }
    result.alphas.push_back(std::move(std::get<CondCircle>(solution)));
  }

  auto sum_index = [&](std::size_t i, std::size_t j) {
    return K.index_of(K.add(characters[i], characters[j]));
  };

  for (std::size_t i = 0; i < characters.size(); ++i) {
    for (std::size_t j = 0; j < characters.size(); ++j) {
      auto c = defect(action, result.alphas[i], result.alphas[j], result.alphas[sum_index(i, j)]);
      ++result.defects.pairs_checked;
      for (const auto& v : c.values) {
        if (!v.is_zero()) {
          ++result.defects.nonzero_defects;
          break;
        }
      }
    }
  }

  for (const auto& alpha : result.alphas) {
    result.retracted.push_back(cond_group_op(CondOp::Sub, alpha, retract_w(orbits, alpha)));
  }

  // After the retract the family is additive in the character at every atom.
  for (std::size_t i = 0; i < characters.size(); ++i) {
    for (std::size_t j = 0; j < characters.size(); ++j) {
      const auto& sum = result.retracted[sum_index(i, j)];
      for (std::size_t x = 0; x < base->size(); ++x) {
        if (sum[x] != result.retracted[i][x] + result.retracted[j][x]) {
          internal("retracted family is not additive at atom '" + base->id(x) + "'");
        }
      }
    }
  }

  try {
    result.witness = conditional_reconstruct(base, K, result.retracted);
  } catch (const NotAdditiveError& e) {
    internal(std::string("reconstruction failed: ") + e.what());
  } catch (const TorsionViolationError& e) {
    internal(std::string("reconstruction failed: ") + e.what());
  }

  for (std::size_t g = 0; g < action.group().order(); ++g) {
    auto expected = cond_group_op(K, CondOp::Sub, cond_compose(result.witness, action.map(g)), result.witness);
    if (!(expected == cocycle.rho[g])) {
      internal("reconstructed witness does not reproduce rho_" + action.group().id(g));
    }
  }
  return result;
}

}  // namespace cobound
