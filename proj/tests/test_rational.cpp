#include "doctest.h"
#include "wilfkit/error.hpp"
#include "wilfkit/rational.hpp"

using namespace wilfkit;

TEST_CASE("rationals print as p/q") {
  CHECK(to_string(make_rational(27, 40)) == "27/40");
  CHECK(to_string(make_rational(4, 2)) == "2/1");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational(" 13/8 ") == make_rational(13, 8));
  CHECK(parse_rational("12/8") == make_rational(3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-5/10") == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("floor_of rounds toward minus infinity") {
  CHECK(floor_of(make_rational(25, 8)) == 3);
  CHECK(floor_of(make_rational(39, 8)) == 4);
  CHECK(floor_of(make_rational(-1, 2)) == -1);
  CHECK(floor_of(make_rational(-4, 2)) == -2);
  CHECK(floor_of(Rational(0)) == 0);
}
