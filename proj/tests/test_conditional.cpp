#include <doctest.h>

#include <random>

#include "cobound/conditional.hpp"
#include "oracles.hpp"

using namespace cobound;
namespace t = cobound::testing;

namespace {

CondCircle circles(const AlgebraPtr& base, std::vector<Circle> values) { return CondCircle{base, std::move(values)}; }

}  // namespace

TEST_CASE("cond_compose example") {
  auto base = t::uniform_algebra(3);
  CondCircle theta = circles(base, {Circle(), Circle(1, 2), Circle(1, 3)});
  CondCircle composed = cond_compose(theta, t::map_of(base, {1, 2, 0}));
  CHECK(composed.values == std::vector<Circle>{Circle(1, 2), Circle(1, 3), Circle()});
  CHECK_THROWS_AS(cond_compose(theta, identity_map(t::uniform_algebra(4))), Error);
}

TEST_CASE("cond_group_op and constants") {
  auto base = t::uniform_algebra(2);
  CondCircle a = circles(base, {Circle(1, 2), Circle(1, 3)});
  CondCircle b = circles(base, {Circle(1, 2), Circle(1, 3)});
  CHECK(cond_group_op(CondOp::Add, a, b).values == std::vector<Circle>{Circle(), Circle(2, 3)});
  CHECK(cond_group_op(CondOp::Sub, a, b) == constant_cond(base, Circle()));
  CHECK(cond_group_op(CondOp::Neg, a).values == std::vector<Circle>{Circle(1, 2), Circle(2, 3)});
  CHECK_THROWS_AS(cond_group_op(CondOp::Add, a, constant_cond(t::uniform_algebra(3), Circle())), Error);

  FinAbGroup K({3});
  CondK x{base, {Element{1}, Element{2}}};
  CHECK(cond_group_op(K, CondOp::Neg, x).values == std::vector<Element>{Element{2}, Element{1}});
}

TEST_CASE("cond_character examples") {
  auto base = t::uniform_algebra(2);
  FinAbGroup Z2({2});
  CondK rho{base, {Element{1}, Element{0}}};
  CHECK(cond_character(Z2, Character{0}, rho) == constant_cond(base, Circle()));
  CHECK(cond_character(Z2, Character{1}, rho).values == std::vector<Circle>{Circle(1, 2), Circle()});
}

TEST_CASE("cond_pair splits products") {
  auto base = t::uniform_algebra(3);
  FinAbGroup A({2}), B({3});
  CondK a{base, {Element{1}, Element{0}, Element{1}}};
  CondK b{base, {Element{2}, Element{1}, Element{0}}};
  CondK ab = cond_pair(A, B, a, b);
  CHECK(ab.values[0] == Element{1, 2});
  auto [a2, b2] = cond_unpair(A, B, ab);
  CHECK(a2 == a);
  CHECK(b2 == b);
}

TEST_CASE("orbits and stabilizers") {
  SUBCASE("trivial group") {
    auto action = t::trivial_action(trivial_group(), 3);
    auto d = orbits_and_stabilizers(action);
    CHECK(d.orbits.size() == 3);
    for (const auto& s : d.stabilizers) CHECK(s == std::vector<std::size_t>{0});
  }
  SUBCASE("rotation") {
    auto d = orbits_and_stabilizers(t::rotation_action(3));
    CHECK(d.orbits == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(d.representatives == std::vector<std::size_t>{0});
    for (const auto& s : d.stabilizers) CHECK(s == std::vector<std::size_t>{0});
  }
  SUBCASE("swap plus a fixed atom") {
    auto base = t::uniform_algebra(3);
    GroupAction action(cyclic_group(2), base, {identity_map(base), t::map_of(base, {1, 0, 2})});
    auto d = orbits_and_stabilizers(action);
    CHECK(d.orbits == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
    CHECK(d.stabilizers[2] == std::vector<std::size_t>{0, 1});
    CHECK(d.stabilizers[0] == std::vector<std::size_t>{0});
  }
  SUBCASE("S3 on three points") {
    auto base = t::uniform_algebra(3);
    FiniteGroup S3 = symmetric_group_3();
    // r rotates, s fixes the first atom and swaps the other two.
    auto r = t::map_of(base, {1, 2, 0});
    auto s = t::map_of(base, {0, 2, 1});
    std::vector<AbstractMap> maps;
    for (const auto& word : S3.ids()) {
      AbstractMap m = identity_map(base);
      for (char letter : word) {
        if (letter == 'r') m = compose_maps(m, r);
        if (letter == '2') m = compose_maps(m, r);
        if (letter == 's') m = compose_maps(m, s);
      }
      maps.push_back(m);
    }
    GroupAction action(S3, base, maps);
    auto d = orbits_and_stabilizers(action);
    CHECK(d.orbits.size() == 1);
    for (const auto& stab : d.stabilizers) CHECK(stab.size() == 2);
  }
}

TEST_CASE("group action is validated") {
  auto base = t::uniform_algebra(3);
  CHECK_THROWS_AS(GroupAction(cyclic_group(2), base, {identity_map(base), t::map_of(base, {1, 2, 0})}), Error);
  CHECK_THROWS_AS(GroupAction(cyclic_group(2), base, {t::map_of(base, {1, 0, 2}), t::map_of(base, {1, 0, 2})}),
                  Error);
  CHECK_THROWS_AS(GroupAction(cyclic_group(2), base, {identity_map(base), t::map_of(base, {0, 0, 2})}), Error);
}

TEST_CASE("retract_w examples") {
  auto action = t::rotation_action(3);
  CondCircle theta = circles(action.base(), {Circle(1, 2), Circle(1, 3), Circle()});
  CHECK(retract_w(action, theta) == constant_cond(action.base(), Circle(1, 2)));
  CondCircle invariant = constant_cond(action.base(), Circle(2, 5));
  CHECK(retract_w(action, invariant) == invariant);
}

TEST_CASE("is_invariant examples") {
  auto rot = t::rotation_action(3);
  CHECK(is_invariant(rot, constant_cond(rot.base(), Circle(1, 7))));
  CHECK_FALSE(is_invariant(rot, circles(rot.base(), {Circle(1, 2), Circle(1, 3), Circle()})));
  std::mt19937_64 rng(23);
  auto fixed = t::trivial_action(klein_group(), 4);
  for (int i = 0; i < 50; ++i) {
    CondCircle theta{fixed.base(), {}};
    for (std::size_t x = 0; x < 4; ++x) theta.values.push_back(t::random_circle(rng));
    CHECK(is_invariant(fixed, theta));
  }
}

TEST_CASE("conditional_reconstruct examples") {
  auto base = t::uniform_algebra(3);
  FinAbGroup V({2, 2});
  std::vector<CondCircle> family;
  for (const auto& c : V.characters()) {
    family.push_back(constant_cond(base, iota_embed(V, Element{1, 1}).values[V.index_of(c)]));
  }
  CHECK(conditional_reconstruct(base, V, family) == constant_cond(base, Element{1, 1}));

  std::mt19937_64 rng(29);
  for (int i = 0; i < 50; ++i) {
    CondK rho{base, {}};
    for (std::size_t x = 0; x < 3; ++x) rho.values.push_back(V.element(t::draw(rng, 4)));
    std::vector<CondCircle> fam;
    for (const auto& c : V.characters()) fam.push_back(cond_character(V, c, rho));
    CHECK(conditional_reconstruct(base, V, fam) == rho);
    fam[2].values[1] += Circle(1, 2);
    try {
      conditional_reconstruct(base, V, fam);
      FAIL("accepted");
    } catch (const NotAdditiveError& e) {
      CHECK(e.atom() == std::optional<std::size_t>(1));
    }
  }
}

TEST_CASE("corestrict") {
  auto base = t::uniform_algebra(3);
  CondCircle s = circles(base, {Circle(), Circle(1, 2), Circle()});
  auto two_torsion = [](const Circle& c) { return c.scaled(2).is_zero(); };
  CHECK(corestrict(s, two_torsion) == s);
  CHECK(corestrict(s, [](const Circle&) { return true; }) == s);
  s.values[2] = Circle(1, 3);
  try {
    corestrict(s, two_torsion);
    FAIL("accepted");
  } catch (const NotSupportedError& e) {
    CHECK(e.atom() == 2);
  }
}
