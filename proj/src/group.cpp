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

#include "cobound/group.hpp"

#include <algorithm>
#include <array>

#include "cobound/error.hpp"

namespace cobound {

std::optional<std::string> FiniteGroup::check_laws(
    const std::vector<std::vector<std::size_t>>& table, std::size_t identity) {
  const std::size_t n = table.size();
  if (n == 0) return "group has no elements";
  if (identity >= n) return "identity index out of range";
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) return "row " + std::to_string(a) + " has the wrong length";
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) return "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range";
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[identity][a] != a || table[a][identity] != a) {
      return "identity fails at element " + std::to_string(a);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) {
      has_inverse = table[a][b] == identity && table[b][a] == identity;
    }
    if (!has_inverse) return "element " + std::to_string(a) + " has no inverse";
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::vector<std::string> ids, std::vector<std::vector<std::size_t>> table,
                         std::size_t identity)
    : ids_(std::move(ids)), table_(std::move(table)), identity_(identity) {
  if (ids_.size() != table_.size()) throw Error(ErrorKind::Mismatch, "group table size differs from element list");
  if (auto failure = check_laws(table_, identity_)) throw Error(ErrorKind::Mismatch, *failure);
  for (std::size_t a = 0; a < ids_.size(); ++a) {
    for (std::size_t b = a + 1; b < ids_.size(); ++b) {
      if (ids_[a] == ids_[b]) throw Error(ErrorKind::Mismatch, "duplicate group element id '" + ids_[a] + "'");
    }
  }
  inverse_.resize(order());
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) {
      if (table_[a][b] == identity_) inverse_[a] = b;
    }
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<std::size_t> FiniteGroup::generated_subgroup(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<std::size_t> frontier{identity_};
  in[identity_] = true;
  while (!frontier.empty()) {
    std::size_t a = frontier.back();
    frontier.pop_back();
    for (std::size_t g : gens) {
      std::size_t b = mul(a, g);
      if (!in[b]) {
        in[b] = true;
        frontier.push_back(b);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order(); ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> FiniteGroup::generators_of(const std::vector<std::size_t>& subgroup) const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> reached{identity_};
  for (std::size_t a : subgroup) {
    if (std::binary_search(reached.begin(), reached.end(), a)) continue;
    gens.push_back(a);
    reached = generated_subgroup(gens);
  }
  return gens;
}

// ---- named groups ----------------------------------------------------------

FiniteGroup trivial_group() { return FiniteGroup({"e"}, {{0}}, 0); }

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Mismatch, "cyclic group of order 0");
  std::vector<std::string> ids{"e"};
  for (std::size_t k = 1; k < n; ++k) ids.push_back(k == 1 ? "g" : "g" + std::to_string(k));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(ids), std::move(table), 0);
}

FiniteGroup klein_group() {
  // Elements are bit pairs; multiplication is xor.
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  }
  return FiniteGroup({"e", "a", "b", "ab"}, std::move(table), 0);
}

FiniteGroup symmetric_group_3() {
  using Perm = std::array<std::size_t, 3>;
  auto compose = [](const Perm& p, const Perm& q) {
    return Perm{p[q[0]], p[q[1]], p[q[2]]};
  };
  const Perm e{0, 1, 2};
  const Perm r{1, 2, 0};
  const Perm s{0, 2, 1};
  const Perm r2 = compose(r, r);
  std::vector<Perm> perms{e, r, r2, s, compose(s, r), compose(s, r2)};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      auto it = std::find(perms.begin(), perms.end(), compose(perms[a], perms[b]));
      table[a][b] = static_cast<std::size_t>(it - perms.begin());
    }
  }
  return FiniteGroup({"e", "r", "r2", "s", "sr", "sr2"}, std::move(table), 0);
}

FiniteGroup named_group(const std::string& name) {
  if (name == "trivial") return trivial_group();
  if (name == "c2") return cyclic_group(2);
  if (name == "c3") return cyclic_group(3);
  if (name == "klein") return klein_group();
  if (name == "s3") return symmetric_group_3();
  throw Error(ErrorKind::Mismatch, "unknown group '" + name + "'");
}

}  // namespace cobound
