#include <doctest.h>

#include <random>

#include "cobound/abgroup.hpp"
#include "cobound/group.hpp"
#include "oracles.hpp"

using namespace cobound;
namespace t = cobound::testing;

TEST_CASE("lexicographic enumeration, first factor most significant") {
  FinAbGroup K({2, 3});
  CHECK(K.order() == 6);
  CHECK(K.exponent() == 6);
  CHECK(K.element(1) == Element{0, 1});
  CHECK(K.element(3) == Element{1, 0});
  for (std::size_t i = 0; i < K.order(); ++i) CHECK(K.index_of(K.element(i)) == i);
  CHECK(K.to_string() == "Z/2 x Z/3");
  CHECK(FinAbGroup({4, 6}).exponent() == 12);
  CHECK(FinAbGroup(std::vector<std::int64_t>{}).order() == 1);
  CHECK_THROWS_AS(FinAbGroup({0}), Error);
  CHECK_THROWS_AS(K.index_of(Element{2, 0}), Error);
}

TEST_CASE("dual group examples") {
  CHECK(dual_group(FinAbGroup({2})) == FinAbGroup({2}));
  CHECK(dual_group(FinAbGroup({2, 3})) == FinAbGroup({2, 3}));
}

TEST_CASE("pairing examples") {
  FinAbGroup Z4({4});
  CHECK(pairing(Z4, Character{1}, Element{3}) == Circle(3, 4));
  for (const auto& k : Z4.elements()) CHECK(pairing(Z4, Z4.zero<CharacterTag>(), k).is_zero());
  CHECK_THROWS_AS(pairing(Z4, Character{1, 0}, Element{1}), Error);
}

TEST_CASE("pairing is bilinear and non-degenerate") {
  for (const auto& m : std::vector<std::vector<std::int64_t>>{{2}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 3}}) {
    FinAbGroup K(m);
    CAPTURE(K.to_string());
    for (const auto& b : K.characters()) {
      bool trivial = true;
      for (const auto& a : K.elements()) {
        if (!pairing(K, b, a).is_zero()) trivial = false;
        for (const auto& a2 : K.elements()) CHECK(pairing(K, b, K.add(a, a2)) == pairing(K, b, a) + pairing(K, b, a2));
      }
      CHECK(trivial == (b == K.zero<CharacterTag>()));
    }
  }
}

TEST_CASE("iota examples") {
  FinAbGroup Z2({2});
  CharacterTable zero = iota_embed(Z2, Element{0});
  CHECK(zero.values == std::vector<Circle>{Circle(), Circle()});
  CHECK(iota_embed(Z2, Element{1}).values == std::vector<Circle>{Circle(), Circle(1, 2)});
}

TEST_CASE("element_from_character_table examples and errors") {
  FinAbGroup Z2({2});
  CHECK(element_from_character_table({Z2, {Circle(), Circle(1, 2)}}) == Element{1});
  FinAbGroup K({2, 3});
  CHECK(element_from_character_table({K, std::vector<Circle>(6)}) == K.zero());

  try {
    element_from_character_table({Z2, {Circle(), Circle(1, 3)}});
    FAIL("accepted");
  } catch (const TorsionViolationError& e) {
    CHECK(e.kind() == ErrorKind::TorsionViolation);
    CHECK(e.factor() == 0);
  }

  // Right values on the generators, wrong value elsewhere.
  FinAbGroup V({2, 2});
  std::vector<Circle> values(4);
  values[1] = Circle(1, 2);
  values[2] = Circle(1, 2);
  values[3] = Circle(1, 2);
  try {
    element_from_character_table({V, values});
    FAIL("accepted");
  } catch (const NotAdditiveError& e) {
    CHECK_FALSE(e.atom().has_value());
    std::size_t s = V.index_of(V.add(V.character(e.lhs()), V.character(e.rhs())));
    CHECK(values[s] != values[e.lhs()] + values[e.rhs()]);
  }
}

TEST_CASE("additivity scan matches a direct check") {
  std::mt19937_64 rng(17);
  FinAbGroup K({2, 4});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Circle> values(K.order());
    for (auto& v : values) v = Circle(static_cast<std::int64_t>(t::draw(rng, 4)), 4);
    bool additive = true;
    for (std::size_t i = 0; i < K.order(); ++i) {
      for (std::size_t j = 0; j < K.order(); ++j) {
        if (values[K.index_of(K.add(K.character(i), K.character(j)))] != values[i] + values[j]) additive = false;
      }
    }
    CHECK(first_additivity_violation(K, values).has_value() == !additive);
  }
  CHECK(t::count_additive_tables(K) == K.order());
}

TEST_CASE("finite groups") {
  for (const char* name : {"trivial", "c2", "c3", "klein", "s3"}) {
    FiniteGroup G = named_group(name);
    CAPTURE(name);
    CHECK(G.id(G.identity()) == "e");
    for (std::size_t a = 0; a < G.order(); ++a) CHECK(G.mul(a, G.inverse(a)) == G.identity());
  }
  FiniteGroup S3 = symmetric_group_3();
  CHECK(S3.order() == 6);
  bool abelian = true;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) abelian = abelian && S3.mul(a, b) == S3.mul(b, a);
  }
  CHECK_FALSE(abelian);
  CHECK(S3.generated_subgroup({*S3.index_of("r")}).size() == 3);
  CHECK(S3.generated_subgroup(S3.generators_of({0, 1, 2, 3, 4, 5})).size() == 6);
  CHECK_THROWS_AS(named_group("c4"), Error);
  // Missing inverse: a "group" where g*g = g.
  CHECK(FiniteGroup::check_laws({{0, 1}, {1, 1}}, 0).has_value());
  CHECK_THROWS_AS(FiniteGroup({"e", "g"}, {{0, 1}, {1, 1}}, 0), Error);
}
