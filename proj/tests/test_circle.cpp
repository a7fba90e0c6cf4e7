#include <doctest.h>

#include <limits>
#include <random>

#include "cobound/circle.hpp"
#include "cobound/error.hpp"
#include "cobound/rational.hpp"
#include "oracles.hpp"

using namespace cobound;
namespace t = cobound::testing;

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-3, 6).den() == 2);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational(-1, 3).to_string() == "-1/3");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("3/9") == Rational(1, 3));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("0/7") == Rational(0));
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1"}) {
    CAPTURE(bad);
    try {
      Rational::parse(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big(std::numeric_limits<std::int64_t>::max());
  try {
    (void)(big + Rational(1));
    FAIL("no overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK_THROWS_AS((void)(big * Rational(2)), Error);
  CHECK(big * Rational(1, 2) + big * Rational(1, 2) == big);
}

TEST_CASE("circle canonical form") {
  CHECK(Circle(Rational(3, 2)) == Circle(1, 2));
  CHECK(Circle(Rational(-1, 3)) == Circle(2, 3));
  CHECK(Circle(5, 5).is_zero());
  CHECK(Circle().to_string() == "0/1");
  CHECK(Circle(6, 8).to_string() == "3/4");
  CHECK(Circle(1, 6).order() == 6);
  CHECK(Circle::parse("5/4") == Circle(1, 4));
}

TEST_CASE("circle_arith examples") {
  CHECK(circle_arith(CircleOp::Add, Circle(1, 2), Circle(1, 2)) == Circle::zero());
  CHECK(circle_arith(CircleOp::Neg, Circle(1, 3)) == Circle(2, 3));
  CHECK(circle_arith(CircleOp::IntScale, Circle(1, 4), Circle(), 3) == Circle(3, 4));
  CHECK(circle_arith(CircleOp::IntScale, Circle(1, 4), Circle(), -1) == Circle(3, 4));
  CHECK(Circle(1, 3).scaled(std::numeric_limits<std::int64_t>::max()) == Circle(1, 3));
}

TEST_CASE("divisible_root examples") {
  CHECK(divisible_root(2, Circle(1, 3)) == Circle(1, 6));
  CHECK(divisible_root(1, Circle(2, 7)) == Circle(2, 7));
  CHECK(divisible_root(3, Circle::zero()) == Circle::zero());
  CHECK_THROWS_AS(divisible_root(0, Circle(1, 2)), Error);
}

TEST_CASE("divisible_root is a right inverse but not additive") {
  // g_2(1/2) + g_2(1/2) = 1/2 while g_2(0) = 0.
  CHECK(divisible_root(2, Circle(1, 2)) + divisible_root(2, Circle(1, 2)) != divisible_root(2, Circle::zero()));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Circle x = t::random_circle(rng, 60);
    auto n = static_cast<std::int64_t>(1 + t::draw(rng, 30));
    CHECK(divisible_root(n, x).scaled(n) == x);
  }
}

TEST_CASE("circle group laws") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Circle a = t::random_circle(rng), b = t::random_circle(rng), c = t::random_circle(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a + (-a) == Circle::zero());
    CHECK(a - b == a + (-b));
    CHECK(a.scaled(a.order()).is_zero());
    CHECK(a.value() >= Rational(0));
    CHECK(a.value() < Rational(1));
    CHECK(Circle::parse(a.to_string()) == a);
  }
}
