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

// Exhaustive search for a potential. Deliberately shares nothing with the
// character pipeline beyond the data types: no orbits, no characters.

namespace cobound {

OracleResult brute_force_oracle(const Cocycle& cocycle, std::uint64_t max_candidates) {
  const auto& action = cocycle.action;
  const auto& K = cocycle.group;
  const std::size_t atoms = action.atoms();
  const std::size_t order = K.order();
  const std::size_t gammas = action.group().order();

  std::uint64_t space = 1;
  for (std::size_t i = 0; i < atoms; ++i) {
    if (space > max_candidates / order) {
      throw Error(ErrorKind::TooLarge,
                  "|K|^atoms exceeds the oracle bound of " + std::to_string(max_candidates));
    }
    space *= order;
  }
  if (cocycle.rho.size() != gammas) {
    throw Error(ErrorKind::Mismatch, "cocycle must give one conditional element per group element");
  }

  // difference[a][b] = index of (element a) - (element b)
  std::vector<std::vector<std::size_t>> difference(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) difference[a][b] = K.index_of(K.sub(K.element(a), K.element(b)));
  }
  std::vector<std::vector<std::size_t>> rho(gammas, std::vector<std::size_t>(atoms));
  std::vector<std::vector<std::size_t>> moves(gammas, std::vector<std::size_t>(atoms));
  for (std::size_t g = 0; g < gammas; ++g) {
    for (std::size_t x = 0; x < atoms; ++x) {
      rho[g][x] = K.index_of(cocycle.rho[g][x]);
      moves[g][x] = action.apply(g, x);
    }
  }

  std::vector<std::size_t> candidate(atoms, 0);
  OracleResult result{NotCoboundary{}, 0};
  for (std::uint64_t n = 0; n < space; ++n) {
    ++result.candidates_checked;
    bool works = true;
    for (std::size_t g = 0; g < gammas && works; ++g) {
      for (std::size_t x = 0; x < atoms && works; ++x) {
        works = difference[candidate[moves[g][x]]][candidate[x]] == rho[g][x];
      }
    }
    if (works) {
      Coboundary found;
      found.witness.base = action.base();
      for (std::size_t v : candidate) found.witness.values.push_back(K.element(v));
      result.decision = std::move(found);
      return result;
    }
    // Next candidate in lexicographic order: the last atom varies fastest.
    for (std::size_t i = atoms; i-- > 0;) {
      if (++candidate[i] < order) break;
      candidate[i] = 0;
    }
  }
  return result;
}

}  // namespace cobound
