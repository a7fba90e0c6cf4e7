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
#include <optional>
#include <string>
#include <vector>

namespace cobound {

/// A finite (not necessarily abelian) group given by an element list and a
/// multiplication table: `table[a][b]` is the index of a*b.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Checks closure, associativity, the identity and inverses. Throws
  /// Error(Mismatch) naming the first failed law.
  FiniteGroup(std::vector<std::string> ids, std::vector<std::vector<std::size_t>> table,
              std::size_t identity);

  std::size_t order() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t g) const { return ids_.at(g); }
  std::optional<std::size_t> index_of(const std::string& id) const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Subgroup generated by `gens`, as a sorted list of element indices.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;
  /// Greedy generating set of a subgroup: walk its elements in index order
  /// and keep each one not yet generated.
  std::vector<std::size_t> generators_of(const std::vector<std::size_t>& subgroup) const;

  /// Returns a description of the first failed group law, or nullopt.
  static std::optional<std::string> check_laws(const std::vector<std::vector<std::size_t>>& table,
                                               std::size_t identity);

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Small groups used by the fuzz harness and tests. Element ids are short
/// words; the identity is always "e" at index 0.
FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup klein_group();
FiniteGroup symmetric_group_3();

/// Looks up "trivial", "c2", "c3", "klein" or "s3". Throws Error(Mismatch)
/// on anything else.
FiniteGroup named_group(const std::string& name);

}  // namespace cobound
