#include <doctest.h>

#include "spectree/rational.hpp"

using namespace spectree;

TEST_CASE("make_rational canonicalises and rejects zero denominators") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("parse_rational accepts fractions, integers and decimals") {
  CHECK(parse_rational("5/3") == Rational(5, 3));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(BigInt("123456789012345678901234567890")));
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1/-2", "- 1", "1e5"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse_rational") {
  for (const char* s : {"0", "-3/7", "22/7", "100"}) CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("floor, ceil and sign follow mathematical conventions") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(4)) == 4);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(sign(Rational(-1, 9)) == -1);
  CHECK(sign(BigInt(0)) == 0);
}

TEST_CASE("isqrt is the exact integer square root") {
  CHECK(isqrt(0L) == 0);
  CHECK(isqrt(15L) == 3);
  CHECK(isqrt(16L) == 4);
  CHECK(isqrt(BigInt("1000000000000000000000000")) == BigInt("1000000000000"));
  for (long z = 0; z < 5000; ++z) {
    const long r = isqrt(z);
    CHECK(r * r <= z);
    CHECK((r + 1) * (r + 1) > z);
  }
  CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}
