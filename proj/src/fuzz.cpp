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

#include "cobound/fuzz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

namespace cobound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [0, n) by rejection, so results do not depend on the
/// standard library's distribution implementation.
std::size_t below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % bound);
}

using Perm = std::vector<std::size_t>;

/// Every homomorphism from `subgroup` (element indices of G) into a target
/// group presented by `candidates`, `identity` and `compose`. Each result is
/// aligned with G's element indices; entries outside the subgroup are
/// left at `identity`.
template <class T, class Compose>
std::vector<std::vector<T>> enumerate_homomorphisms(const FiniteGroup& G, const std::vector<std::size_t>& subgroup,
                                                    const std::vector<T>& candidates, const T& identity,
                                                    Compose compose) {
  const auto gens = G.generators_of(subgroup);
  std::vector<std::vector<T>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    std::vector<std::optional<T>> image(G.order());
    image[G.identity()] = identity;
    std::vector<std::size_t> frontier{G.identity()};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::size_t a = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        std::size_t b = G.mul(a, gens[i]);
        T value = compose(*image[a], candidates[choice[i]]);
        if (!image[b]) {
          image[b] = value;
          frontier.push_back(b);
        } else {
          ok = *image[b] == value;
        }
      }
    }
    for (std::size_t a : subgroup) {
      for (std::size_t b : subgroup) {
        if (!ok) break;
        ok = *image[G.mul(a, b)] == compose(*image[a], *image[b]);
      }
    }
    if (ok) {
      std::vector<T> hom(G.order(), identity);
      for (std::size_t a : subgroup) hom[a] = *image[a];
      out.push_back(std::move(hom));
    }
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < candidates.size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

std::vector<std::size_t> all_elements(const FiniteGroup& G) {
  std::vector<std::size_t> out(G.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

/// All permutation actions of G on n points, cached per (group, n).
const std::vector<std::vector<Perm>>& actions_of(const std::string& name, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, std::vector<std::vector<Perm>>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(name, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FiniteGroup G = named_group(name);
  std::vector<Perm> perms;
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  Perm id = perms.front();
  auto compose = [](const Perm& lhs, const Perm& rhs) {
    Perm out(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = lhs[rhs[i]];
    return out;
  };
  return cache.emplace(key, enumerate_homomorphisms(G, all_elements(G), perms, id, compose)).first->second;
}

/// All homomorphisms from a subgroup of G into K (as element indices).
const std::vector<std::vector<std::size_t>>& homs_into(const std::string& name,
                                                       const std::vector<std::size_t>& subgroup,
                                                       const FinAbGroup& K) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, std::vector<std::size_t>, std::vector<std::int64_t>>,
                  std::vector<std::vector<std::size_t>>>
      cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(name, subgroup, K.moduli());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FiniteGroup G = named_group(name);
  std::vector<std::size_t> elements(K.order());
  for (std::size_t i = 0; i < elements.size(); ++i) elements[i] = i;
  auto add = [&K](std::size_t a, std::size_t b) { return K.index_of(K.add(K.element(a), K.element(b))); };
  return cache.emplace(key, enumerate_homomorphisms(G, subgroup, elements, std::size_t{0}, add)).first->second;
}

struct Orbit {
  std::size_t representative;
  std::vector<std::size_t> stabilizer;
};

std::vector<Orbit> orbits_of(const FiniteGroup& G, const std::vector<Perm>& action, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<Orbit> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    Orbit o{x, {}};
    for (std::size_t g = 0; g < G.order(); ++g) {
      seen[action[g][x]] = true;
      if (action[g][x] == x) o.stabilizer.push_back(g);
    }
    out.push_back(std::move(o));
  }
  return out;
}

bool has_nonzero_hom(const std::vector<std::vector<std::size_t>>& homs) {
  return std::any_of(homs.begin(), homs.end(), [](const auto& h) {
    return std::any_of(h.begin(), h.end(), [](std::size_t v) { return v != 0; });
  });
}

}  // namespace

FuzzCase generate_fuzz_case(const FuzzConfig& config, std::size_t index) {
  if (config.groups.empty() || config.moduli.empty() || config.max_atoms == 0) {
    throw Error(ErrorKind::Mismatch, "fuzz configuration needs groups, moduli and at least one atom");
  }
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(index)));
  FuzzCase out;
  out.index = index;
  out.group_name = config.groups[below(rng, config.groups.size())];
  const FiniteGroup G = named_group(out.group_name);
  const FinAbGroup K(config.moduli[below(rng, config.moduli.size())]);
  const std::size_t n = 1 + below(rng, config.max_atoms);
  out.intended_coboundary = below(rng, 2) == 0;

  // Negatives need an orbit whose stabilizer maps nontrivially into K.
  const std::vector<Perm>* action = nullptr;
  std::vector<Orbit> orbits;
  std::vector<std::size_t> obstructable;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto& actions = actions_of(out.group_name, n);
    action = &actions[below(rng, actions.size())];
    orbits = orbits_of(G, *action, n);
    if (out.intended_coboundary) break;
    obstructable.clear();
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (has_nonzero_hom(homs_into(out.group_name, orbits[o].stabilizer, K))) obstructable.push_back(o);
    }
    if (!obstructable.empty()) break;
  }
  if (obstructable.empty()) out.intended_coboundary = true;

  std::vector<std::size_t> potential(n);
  for (auto& v : potential) v = below(rng, K.order());
  auto add = [&K](std::size_t a, std::size_t b) { return K.index_of(K.add(K.element(a), K.element(b))); };
  auto sub = [&K](std::size_t a, std::size_t b) { return K.index_of(K.sub(K.element(a), K.element(b))); };

  std::vector<std::vector<std::size_t>> rho(G.order(), std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < G.order(); ++g) {
    for (std::size_t x = 0; x < n; ++x) rho[g][x] = sub(potential[(*action)[g][x]], potential[x]);
  }

  if (!out.intended_coboundary) {
    // Perturb rho_h(x0) for some h fixing x0 by k != 0, then close the
    // perturbation up to a cocycle: extend h -> k to a homomorphism phi on
    // the stabilizer and induce it along the orbit.
    const Orbit& orbit = orbits[obstructable[below(rng, obstructable.size())]];
    const auto& homs = homs_into(out.group_name, orbit.stabilizer, K);
    const std::vector<std::size_t>* phi = nullptr;
    for (int attempt = 0; attempt < 16 && phi == nullptr; ++attempt) {
      std::size_t h = orbit.stabilizer[below(rng, orbit.stabilizer.size())];
      std::size_t k = below(rng, K.order());
      if (h == G.identity() || k == 0) continue;
      std::vector<const std::vector<std::size_t>*> matching;
      for (const auto& hom : homs) {
        if (hom[h] == k) matching.push_back(&hom);
      }
      if (!matching.empty()) phi = matching[below(rng, matching.size())];
    }
    if (phi == nullptr) {
      std::vector<const std::vector<std::size_t>*> nonzero;
      for (const auto& hom : homs) {
        if (std::any_of(hom.begin(), hom.end(), [](std::size_t v) { return v != 0; })) nonzero.push_back(&hom);
      }
      phi = nonzero[below(rng, nonzero.size())];
    }
    const std::size_t x0 = orbit.representative;
    std::vector<std::optional<std::size_t>> coset_rep(n);
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::size_t y = (*action)[g][x0];
      if (!coset_rep[y]) coset_rep[y] = g;
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (std::size_t y = 0; y < n; ++y) {
        if (!coset_rep[y]) continue;
        std::size_t s_y = *coset_rep[y];
        std::size_t s_gy = *coset_rep[(*action)[g][y]];
        std::size_t stab = G.mul(G.inverse(s_gy), G.mul(g, s_y));
        rho[g][y] = add(rho[g][y], (*phi)[stab]);
      }
    }
  } else {
    std::vector<Element> f;
    for (std::size_t v : potential) f.push_back(K.element(v));
    out.potential = std::move(f);
  }

  // Optionally add a null atom, fixed by the action, carrying junk values.
  std::optional<std::size_t> null_position;
  if (n < config.max_atoms && below(rng, 4) == 0) null_position = below(rng, n + 1);
  const std::size_t total = n + (null_position ? 1 : 0);
  std::vector<std::size_t> concrete_of(n);
  for (std::size_t x = 0, c = 0; x < n; ++x, ++c) {
    if (null_position && c == *null_position) ++c;
    concrete_of[x] = c;
  }

  std::vector<WeightedAtom> atoms(total);
  for (std::size_t c = 0; c < total; ++c) atoms[c].id = std::string(1, static_cast<char>('a' + c));
  for (std::size_t x = 0; x < n; ++x) {
    auto num = static_cast<std::int64_t>(1 + below(rng, 3));
    auto den = static_cast<std::int64_t>(1 + below(rng, 4));
    atoms[concrete_of[x]].weight = Rational(num, den);
  }

  Scenario& s = out.scenario;
  s.space = ConcreteSpace(std::move(atoms));
  s.group = G;
  s.K = K;
  s.action.assign(G.order(), std::vector<std::size_t>(total));
  s.cocycle.assign(G.order(), std::vector<std::optional<Element>>(total));
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (null_position) {
      s.action[g][*null_position] = *null_position;
      s.cocycle[g][*null_position] = K.element(below(rng, K.order()));
    }
    for (std::size_t x = 0; x < n; ++x) {
      s.action[g][concrete_of[x]] = concrete_of[(*action)[g][x]];
      s.cocycle[g][concrete_of[x]] = K.element(rho[g][x]);
    }
  }
  return out;
}

bool certificate_is_sound(const Cocycle& cocycle, const Certificate& certificate) {
  const auto& action = cocycle.action;
  if (certificate.gamma >= action.group().order() || certificate.atom >= action.atoms()) return false;
  if (!cocycle.group.contains(certificate.character)) return false;
  if (action.apply(certificate.gamma, certificate.atom) != certificate.atom) return false;
  return !pairing(cocycle.group, certificate.character, cocycle.rho[certificate.gamma][certificate.atom]).is_zero();
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  report.seed = config.seed;
  report.trials = config.trials;
  for (std::size_t i = 0; i < config.trials; ++i) {
    FuzzCase fc = generate_fuzz_case(config, i);
    PreparedScenario prepared = prepare_scenario(fc.scenario);
    const Cocycle& cocycle = *prepared.cocycle;

    TrialRecord rec;
    rec.index = i;
    rec.group_name = fc.group_name;
    rec.moduli = fc.scenario.K.moduli();
    rec.atoms = cocycle.action.atoms();
    rec.intended_coboundary = fc.intended_coboundary;
    (fc.intended_coboundary ? report.positives : report.negatives) += 1;

    OracleResult oracle = brute_force_oracle(cocycle, config.max_oracle);
    rec.oracle_verdict = is_coboundary(oracle.decision) ? "coboundary" : "not_coboundary";
    if (is_coboundary(oracle.decision) != fc.intended_coboundary) ++report.generator_mismatches;

    try {
      Decision decision = moore_schmidt_decide(cocycle);
      if (auto* cob = std::get_if<Coboundary>(&decision)) {
        rec.decide_verdict = "coboundary";
        rec.witness_json = cond_to_json(cob->witness).dump();
        auto rebuilt = coboundary_from_potential(cocycle.action, cocycle.group, cob->witness);
        rec.witness_valid = rebuilt.rho == cocycle.rho;
        if (fc.potential) {
          CondK original{cocycle.action.base(), *fc.potential};
          auto difference = cond_group_op(cocycle.group, CondOp::Sub, original, cob->witness);
          rec.witness_valid = rec.witness_valid && is_invariant(cocycle.action, difference);
        }
        if (!rec.witness_valid) ++report.witness_failures;
      } else {
        rec.decide_verdict = "not_coboundary";
        rec.certificate = std::get<NotCoboundary>(decision).certificate;
        rec.certificate_valid = rec.certificate && certificate_is_sound(cocycle, *rec.certificate);
        if (!rec.certificate_valid) ++report.certificate_failures;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InternalInconsistency) throw;
      rec.decide_verdict = "internal_error";
      ++report.internal_errors;
    }
    (rec.decide_verdict == rec.oracle_verdict ? report.agree : report.disagree) += 1;
    report.records.push_back(std::move(rec));
  }
  return report;
}

nlohmann::ordered_json fuzz_report_to_json(const FuzzReport& report, bool with_records) {
  nlohmann::ordered_json out;
  out["seed"] = report.seed;
  out["trials"] = report.trials;
  out["positives"] = report.positives;
  out["negatives"] = report.negatives;
  out["agree"] = report.agree;
  out["disagree"] = report.disagree;
  out["internal_errors"] = report.internal_errors;
  out["certificate_failures"] = report.certificate_failures;
  out["witness_failures"] = report.witness_failures;
  out["generator_mismatches"] = report.generator_mismatches;
  if (with_records) {
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
      nlohmann::ordered_json j;
      j["index"] = r.index;
      j["group"] = r.group_name;
      j["moduli"] = r.moduli;
      j["atoms"] = r.atoms;
      j["intended"] = r.intended_coboundary ? "coboundary" : "not_coboundary";
      j["decide"] = r.decide_verdict;
      j["oracle"] = r.oracle_verdict;
      if (r.certificate) {
        j["certificate"] = {{"character", r.certificate->character.coords},
                            {"gamma", r.certificate->gamma},
                            {"atom", r.certificate->atom}};
      }
      if (!r.witness_json.empty()) j["F"] = nlohmann::ordered_json::parse(r.witness_json);
      records.push_back(std::move(j));
    }
    out["records"] = std::move(records);
  }
  return out;
}

}  // namespace cobound
