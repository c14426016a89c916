#include "curvecfg/errors.hpp"
#include "curvecfg/rational.hpp"

#include <doctest.h>

using namespace curvecfg;

TEST_CASE("rationals are canonical") {
  Rational q = make_rational(Integer(-6), Integer(-4));
  CHECK(q.get_num() == 3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(make_rational(4, -2)) == "-2");
  CHECK(to_string(make_rational(-225, 67)) == "-225/67");
  CHECK_THROWS_AS(make_rational(1, 0), CurveError);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(make_rational(491, 166), 5) == "2.95783");
  CHECK(to_decimal(make_rational(-225, 67), 5) == "-3.35821");
  CHECK(to_decimal(make_rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(make_rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(make_rational(1, 3), 0) == "0");
  CHECK(to_decimal(make_rational(7, 2), 0) == "4");
  CHECK(to_decimal(Rational(3), 3) == "3.000");
  CHECK(to_decimal(make_rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(make_rational(1, 200), 2) == "0.01");
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-8") == Rational(-8));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), CurveError);
  CHECK_THROWS_AS(parse_rational("1/"), CurveError);
  CHECK_THROWS_AS(parse_rational("1/0"), CurveError);
}
