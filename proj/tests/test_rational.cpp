#include <stdexcept>

#include "doctest.h"
#include "welfarekit/rational.hpp"

using namespace welfarekit;

TEST_SUITE("rational") {

TEST_CASE("parses integers") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2") == Rational(2));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational(" 12 ") == Rational(12));
}

TEST_CASE("parses fractions and normalizes") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-9/10") == Rational(-9, 10));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("6/3") == Rational(2));
}

TEST_CASE("parses decimals exactly") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0.10") == Rational(1, 10));
  CHECK(parse_rational("2.0") == Rational(2));
}

TEST_CASE("decimal arithmetic is exact, not floating point") {
  // 0.1 + 0.1 + 0.1 == 0.3 exactly; doubles famously miss this.
  Rational sum = parse_rational("0.1") + parse_rational("0.1") + parse_rational("0.1");
  CHECK(sum == parse_rational("0.3"));
  CHECK(sum == Rational(3, 10));
}

TEST_CASE("big values round-trip through strings") {
  const std::string big = "123456789012345678901234567890";
  CHECK(to_string(parse_rational(big)) == big);
  // consecutive integers are coprime, so this fraction is already canonical
  const std::string frac = big + "/" + big.substr(0, big.size() - 1) + "1";
  CHECK(to_string(parse_rational(frac)) == frac);
  // a reducible big fraction comes back canonical
  CHECK(to_string(parse_rational(big + "/7")) == "17636684144620811271604938270");
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1."), std::invalid_argument);
}

TEST_CASE("formatting is canonical") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_string(Rational(-9, 10)) == "-9/10");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0)) == "0");
}

}  // TEST_SUITE
