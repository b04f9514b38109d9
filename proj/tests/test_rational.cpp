#include "rational.hpp"

#include "errors.hpp"
#include "test_util.hpp"

#include "doctest.h"

using namespace qfiber;

TEST_CASE("rational canonical form") {
  CHECK(Rational(Int(4), Int(2)) == Rational(2));
  CHECK(Rational(Int(4), Int(2)).den() == 1);
  CHECK(Rational(Int(1), Int(-2)) == Rational(Int(-1), Int(2)));
  CHECK(Rational(Int(-1), Int(2)).den() == 2);
  CHECK(Rational(Int(0), Int(7)) == Rational(0));
  CHECK(Rational(Int(0), Int(7)).den() == 1);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), SemanticError);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational half(Int(1), Int(2));
  const Rational third(Int(1), Int(3));
  CHECK(half + third == Rational(Int(5), Int(6)));
  CHECK(half - third == Rational(Int(1), Int(6)));
  CHECK(half * third == Rational(Int(1), Int(6)));
  CHECK(half / third == Rational(Int(3), Int(2)));
  CHECK_THROWS_AS(half / Rational(0), SemanticError);
  CHECK(-half == Rational(Int(-1), Int(2)));
  CHECK(half < third * Rational(2));
  CHECK(Rational(Int(-3), Int(2)) < Rational(Int(-1), Int(2)));
}

TEST_CASE("rational ceil") {
  CHECK(Rational(Int(3), Int(2)).ceil_value() == 2);
  CHECK(Rational(Int(-3), Int(2)).ceil_value() == -1);
  CHECK(Rational(10).ceil_value() == 10);
  CHECK(Rational(0).ceil_value() == 0);
}

TEST_CASE("rational text round trip") {
  CHECK(Rational::parse("2/4") == Rational(Int(1), Int(2)));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational(Int(-1), Int(3)).str() == "-1/3");
  CHECK(Rational(5).str() == "5");

  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);

  testutil::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational x = testutil::random_rational(rng, 1000000, 1000000);
    CHECK(Rational::parse(x.str()) == x);
  }
}
