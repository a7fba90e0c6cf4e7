#include <doctest.h>

#include <random>
#include <variant>

#include "cobound/cocycle.hpp"
#include "oracles.hpp"

using namespace cobound;
namespace t = cobound::testing;

namespace {

CondK ks(const AlgebraPtr& base, std::vector<Element> values) { return CondK{base, std::move(values)}; }

Cocycle zero_cocycle(const GroupAction& action, const FinAbGroup& K) {
  return Cocycle{action, K, std::vector<CondK>(action.group().order(), constant_cond(action.base(), K.zero()))};
}

// Trivial C2 action on one atom with rho_g = value.
Cocycle single_atom(const FinAbGroup& K, const Element& value) {
  auto action = t::trivial_action(cyclic_group(2), 1);
  return Cocycle{action, K, {ks(action.base(), {K.zero()}), ks(action.base(), {value})}};
}

}  // namespace

TEST_CASE("coboundary_from_potential: rotation example") {
  auto action = t::rotation_action(3);
  FinAbGroup Z2({2});
  CondK F = ks(action.base(), {Element{0}, Element{1}, Element{0}});
  Cocycle rho = coboundary_from_potential(action, Z2, F);
  CHECK(rho.rho[0] == constant_cond(action.base(), Element{0}));
  CHECK(rho.rho[1].values == std::vector<Element>{Element{1}, Element{1}, Element{0}});
  // T^{g^2} sends a->c, b->a, c->b: (F(c)-F(a), F(a)-F(b), F(b)-F(c)).
  CHECK(rho.rho[2].values == std::vector<Element>{Element{0}, Element{1}, Element{1}});
  CHECK_FALSE(validate_cocycle(rho).has_value());
}

TEST_CASE("coboundary_from_potential: constants and trivial actions give zero") {
  auto rot = t::rotation_action(3);
  FinAbGroup K({2, 2});
  CHECK(coboundary_from_potential(rot, K, constant_cond(rot.base(), Element{1, 1})).rho == zero_cocycle(rot, K).rho);
  auto fixed = t::trivial_action(klein_group(), 3);
  CondK F = ks(fixed.base(), {Element{0, 1}, Element{1, 0}, Element{1, 1}});
  CHECK(coboundary_from_potential(fixed, K, F).rho == zero_cocycle(fixed, K).rho);
}

TEST_CASE("validate_cocycle") {
  auto rot = t::rotation_action(3);
  CHECK_FALSE(validate_cocycle(zero_cocycle(rot, FinAbGroup({3}))).has_value());
  auto violation = validate_cocycle(single_atom(FinAbGroup({3}), Element{1}));
  REQUIRE(violation.has_value());
  // rho_e = 0 but rho_g(T^g a) + rho_g(a) = 2.
  CHECK(*violation == CocycleViolation{1, 1, 0});

  Cocycle bad_shape = zero_cocycle(rot, FinAbGroup({3}));
  bad_shape.rho.pop_back();
  CHECK_THROWS_AS(validate_cocycle(bad_shape), Error);
}

TEST_CASE("solve_circle_coboundary") {
  auto rot = t::rotation_action(3);
  std::vector<CondCircle> zero(3, constant_cond(rot.base(), Circle()));
  auto solved = solve_circle_coboundary(rot, zero);
  REQUIRE(std::holds_alternative<CondCircle>(solved));
  CHECK(std::get<CondCircle>(solved) == constant_cond(rot.base(), Circle()));

  auto one = t::trivial_action(cyclic_group(2), 1);
  std::vector<CondCircle> half{constant_cond(one.base(), Circle()), constant_cond(one.base(), Circle(1, 2))};
  auto obstructed = solve_circle_coboundary(one, half);
  REQUIRE(std::holds_alternative<Obstruction>(obstructed));
  CHECK(std::get<Obstruction>(obstructed) == Obstruction{1, 0});

  CondCircle theta{rot.base(), {Circle(), Circle(1, 2), Circle(1, 4)}};
  std::vector<CondCircle> c;
  for (std::size_t g = 0; g < 3; ++g) c.push_back(cond_group_op(CondOp::Sub, cond_compose(theta, rot.map(g)), theta));
  auto alpha = std::get<CondCircle>(solve_circle_coboundary(rot, c));
  for (std::size_t g = 0; g < 3; ++g) CHECK(cond_group_op(CondOp::Sub, cond_compose(alpha, rot.map(g)), alpha) == c[g]);
  CHECK(is_invariant(rot, cond_group_op(CondOp::Sub, alpha, theta)));

  // Not a cocycle: c_g(a) disagrees with what c_{g^2} forces.
  c[2].values[0] += Circle(1, 3);
  try {
    solve_circle_coboundary(rot, c);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InternalInconsistency);
  }
}

TEST_CASE("defect") {
  auto rot = t::rotation_action(3);
  CondCircle a{rot.base(), {Circle(1, 2), Circle(1, 3), Circle()}};
  CondCircle b{rot.base(), {Circle(1, 5), Circle(), Circle(1, 7)}};
  CondCircle sum = cond_group_op(CondOp::Add, a, b);
  CHECK(defect(rot, a, b, sum) == constant_cond(rot.base(), Circle()));
  CondCircle shifted = cond_group_op(CondOp::Add, sum, constant_cond(rot.base(), Circle(1, 9)));
  CHECK(defect(rot, a, b, shifted) == constant_cond(rot.base(), Circle(1, 9)));
  shifted.values[1] += Circle(1, 2);
  CHECK_THROWS_AS(defect(rot, a, b, shifted), Error);

  auto fixed = t::trivial_action(cyclic_group(3), 2);
  CondCircle x{fixed.base(), {Circle(1, 2), Circle(1, 3)}};
  CHECK(is_invariant(fixed, defect(fixed, x, x, constant_cond(fixed.base(), Circle()))));
}

TEST_CASE("moore_schmidt_decide examples") {
  auto rot = t::rotation_action(3);
  FinAbGroup Z2({2});

  Decision zero = moore_schmidt_decide(zero_cocycle(rot, Z2));
  REQUIRE(is_coboundary(zero));
  const auto& cob = std::get<Coboundary>(zero);
  CHECK(cob.witness == constant_cond(rot.base(), Element{0}));
  for (const auto& a : cob.alphas) CHECK(a == constant_cond(rot.base(), Circle()));
  for (const auto& a : cob.retracted) CHECK(a == constant_cond(rot.base(), Circle()));

  Decision obstructed = moore_schmidt_decide(single_atom(Z2, Element{1}));
  REQUIRE_FALSE(is_coboundary(obstructed));
  CHECK(std::get<NotCoboundary>(obstructed).certificate == Certificate{Character{1}, 1, 0});

  CHECK_THROWS_AS(moore_schmidt_decide(single_atom(FinAbGroup({3}), Element{1})), Error);
}

TEST_CASE("decide recovers potentials up to invariants") {
  std::mt19937_64 rng(31);
  FinAbGroup K({2, 2});
  std::vector<GroupAction> actions{t::rotation_action(3), t::rotation_action(2),
                                   t::trivial_action(klein_group(), 3)};
  for (int i = 0; i < 60; ++i) {
    const GroupAction& action = actions[t::draw(rng, actions.size())];
    CondK F{action.base(), {}};
    for (std::size_t x = 0; x < action.atoms(); ++x) F.values.push_back(K.element(t::draw(rng, K.order())));
    Cocycle rho = coboundary_from_potential(action, K, F);
    Decision d = moore_schmidt_decide(rho);
    REQUIRE(is_coboundary(d));
    const auto& cob = std::get<Coboundary>(d);
    CHECK(coboundary_from_potential(action, K, cob.witness).rho == rho.rho);
    CHECK(is_invariant(action, cond_group_op(K, CondOp::Sub, F, cob.witness)));
    CHECK(cob.defects.pairs_checked == K.order() * K.order());
  }
}

TEST_CASE("brute_force_oracle") {
  auto rot = t::rotation_action(3);
  FinAbGroup Z2({2});
  OracleResult zero = brute_force_oracle(zero_cocycle(rot, Z2));
  REQUIRE(is_coboundary(zero.decision));
  CHECK(std::get<Coboundary>(zero.decision).witness == constant_cond(rot.base(), Element{0}));
  CHECK(zero.candidates_checked == 1);

  OracleResult none = brute_force_oracle(single_atom(Z2, Element{1}));
  CHECK_FALSE(is_coboundary(none.decision));
  CHECK_FALSE(std::get<NotCoboundary>(none.decision).certificate.has_value());
  CHECK(none.candidates_checked == 2);

  try {
    brute_force_oracle(zero_cocycle(rot, FinAbGroup({8})), 100);
    FAIL("no bound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}
