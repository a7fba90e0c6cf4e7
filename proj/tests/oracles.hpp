#pragma once

// Test-only reference computations. Nothing here calls into the code path
// it is used to check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cobound/abgroup.hpp"
#include "cobound/balg.hpp"
#include "cobound/circle.hpp"
#include "cobound/conditional.hpp"

namespace cobound::testing {

inline std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline Circle random_circle(std::mt19937_64& rng, std::int64_t max_den = 30) {
  auto den = static_cast<std::int64_t>(1 + draw(rng, static_cast<std::size_t>(max_den)));
  auto num = static_cast<std::int64_t>(draw(rng, static_cast<std::size_t>(den)));
  return Circle(num, den);
}

inline AlgebraPtr uniform_algebra(std::size_t n) {
  std::vector<WeightedAtom> atoms;
  for (std::size_t i = 0; i < n; ++i) atoms.push_back({std::string(1, static_cast<char>('a' + i)), Rational(1)});
  return std::make_shared<const MeasureAlgebra>(MeasureAlgebra::weighted(std::move(atoms)));
}

inline AlgebraPtr weighted_algebra(const std::vector<Rational>& weights) {
  std::vector<WeightedAtom> atoms;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    atoms.push_back({std::string(1, static_cast<char>('a' + i)), weights[i]});
  }
  return std::make_shared<const MeasureAlgebra>(MeasureAlgebra::weighted(std::move(atoms)));
}

inline AbstractMap map_of(const AlgebraPtr& base, std::vector<std::size_t> images) {
  return AbstractMap(base, base, std::move(images));
}

/// Action of Z/n by powers of the cyclic shift x -> x+1 on n atoms.
inline GroupAction rotation_action(std::size_t n) {
  auto base = uniform_algebra(n);
  std::vector<AbstractMap> maps;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = (x + k) % n;
    maps.push_back(map_of(base, images));
  }
  return GroupAction(cyclic_group(n), base, std::move(maps));
}

/// Group acting trivially on n atoms.
inline GroupAction trivial_action(const FiniteGroup& group, std::size_t n) {
  auto base = uniform_algebra(n);
  std::vector<AbstractMap> maps(group.order(), identity_map(base));
  return GroupAction(group, base, std::move(maps));
}

/// Counts additive character tables with values in (1/N)Z/Z, N the
/// exponent, by backtracking over the table in index order and pruning
/// any pair whose three entries are already assigned.
inline std::size_t count_additive_tables(const FinAbGroup& group) {
  const std::size_t n = group.order();
  const std::int64_t exponent = group.exponent();
  std::vector<std::vector<std::size_t>> sum(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::int64_t> c(group.rank());
      auto a = group.character(i);
      auto b = group.character(j);
      for (std::size_t f = 0; f < group.rank(); ++f) c[f] = (a.coords[f] + b.coords[f]) % group.moduli()[f];
      std::size_t idx = 0;
      for (std::size_t f = 0; f < group.rank(); ++f) idx = idx * static_cast<std::size_t>(group.moduli()[f]) + static_cast<std::size_t>(c[f]);
      sum[i][j] = idx;
    }
  }
  std::vector<Circle> table(n);
  std::size_t count = 0;
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      for (std::size_t j = 0; j <= upto; ++j) {
        if (sum[i][j] <= upto && table[sum[i][j]] != table[i] + table[j]) return false;
      }
    }
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      ++count;
      return;
    }
    for (std::int64_t v = 0; v < exponent; ++v) {
      table[pos] = Circle(v, exponent);
      if (consistent(pos)) self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return count;
}

/// Every Boolean homomorphism from the subalgebra of P(domain) generated by
/// `generators` into P(codomain), found by closing the generators under
/// union and complement, taking the minimal non-empty members as atoms and
/// trying every assignment of codomain atoms to them. Each result is given
/// as the image of every generator.
inline std::vector<std::vector<AtomSet>> all_generator_images(std::size_t domain, std::size_t codomain,
                                                              const std::vector<AtomSet>& generators) {
  std::set<AtomSet> closure{AtomSet(domain), AtomSet::full(domain)};
  for (const auto& g : generators) closure.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<AtomSet> current(closure.begin(), closure.end());
    for (const auto& a : current) {
      if (closure.insert(~a).second) grew = true;
      for (const auto& b : current) {
        if (closure.insert(a | b).second) grew = true;
      }
    }
  }
  std::vector<AtomSet> atoms;
  for (const auto& a : closure) {
    if (a.empty()) continue;
    bool minimal = true;
    for (const auto& b : closure) {
      if (!b.empty() && b != a && (b & a) == b) minimal = false;
    }
    if (minimal) atoms.push_back(a);
  }
  std::vector<std::vector<AtomSet>> out;
  if (atoms.empty()) {
    if (codomain == 0) out.push_back(std::vector<AtomSet>(generators.size(), AtomSet(0)));
    return out;
  }
  std::vector<std::size_t> assign(codomain, 0);
  while (true) {
    std::vector<AtomSet> images;
    for (const auto& g : generators) {
      AtomSet img(codomain);
      for (std::size_t x = 0; x < codomain; ++x) {
        if (!(atoms[assign[x]] & g).empty()) img.insert(x);
      }
      images.push_back(img);
    }
    out.push_back(std::move(images));
    std::size_t i = 0;
    for (; i < codomain; ++i) {
      if (++assign[i] < atoms.size()) break;
      assign[i] = 0;
    }
    if (i == codomain) break;
  }
  return out;
}

}  // namespace cobound::testing
