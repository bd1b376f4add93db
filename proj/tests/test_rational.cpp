#include "hakencx/errors.hpp"
#include "hakencx/rational.hpp"

#include <doctest.h>

using namespace hakencx;

TEST_SUITE("rational") {
  TEST_CASE("fraction and display forms") {
    CHECK(to_fraction_string(rational(-15, 2)) == "-15/2");
    CHECK(to_fraction_string(rational(4, 2)) == "2/1");
    CHECK(to_display_string(rational(4, 2)) == "2");
    CHECK(to_display_string(rational(-1, 16)) == "-1/16");
    CHECK(to_display_string(Rational(0)) == "0");
  }

  TEST_CASE("parsing round-trips") {
    for (const Rational& r : {rational(0), rational(-1, 16), rational(7), rational(-15, 2), rational(3, 9)}) {
      CHECK(parse_rational(to_fraction_string(r)) == r);
      CHECK(parse_rational(to_display_string(r)) == r);
    }
    CHECK(parse_rational("+3/6") == rational(1, 2));
    CHECK(parse_rational("-4") == rational(-4));
  }

  TEST_CASE("malformed rationals") {
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "--1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
  }
}
