#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hfp/error.hpp"
#include "hfp/rational.hpp"

using hfp::Rational;

TEST_CASE("reduced storage") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(3, 7) + Rational(1, 14) == Rational(1));
  CHECK(Rational(16, 7) - Rational(4) == Rational(-12, 7));
  CHECK(Rational(2, 7) * Rational(14) == Rational(4));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(-1, 3) < Rational(-1, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), hfp::Error);
}

TEST_CASE("floor and fractional part") {
  CHECK(Rational(-1, 2).floor() == -1);
  CHECK(Rational(-1, 2).ceil() == 0);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-13, 14).frac() == Rational(1, 14));
  CHECK(Rational(5).frac() == Rational(0));
}

TEST_CASE("string form") {
  CHECK(Rational(2, 7).to_string() == "2/7");
  CHECK(Rational(3).to_string() == "3/1");
  CHECK(Rational::parse("-12/7") == Rational(-12, 7));
  CHECK(Rational::parse(" 4 ") == Rational(4));
  CHECK(Rational::parse(Rational(-5, 3).to_string()) == Rational(-5, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), hfp::Error);
  CHECK_THROWS_AS(Rational::parse("x"), hfp::Error);
}

TEST_CASE("overflow is detected") {
  Rational big(INT64_MAX / 2 + 1);
  CHECK_THROWS_AS(big * Rational(4), hfp::Error);
  CHECK_THROWS_AS(Rational(1, INT64_MAX) - Rational(1, INT64_MAX - 1), hfp::Error);
}

TEST_CASE("integer helpers") {
  CHECK(hfp::floor_div(-7, 2) == -4);
  CHECK(hfp::mod_pos(-7, 5) == 3);
  CHECK(hfp::lcm64(4, 6) == 12);
  CHECK(hfp::mod_inverse(3, 7) * 3 % 7 == 1);
}
