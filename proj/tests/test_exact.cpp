#include "spheroidal/exact.hpp"

#include <doctest.h>

using namespace sph;

TEST_CASE("make_rational canonicalizes sign and common factors") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(make_rational(3, 3) == 1);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts p and p/q forms") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-9/16") == make_rational(-9, 16));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK(parse_rational("0") == 0);
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "1/2/3", "--1", "0x10"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse_rational") {
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  for (long p = -7; p <= 7; ++p)
    for (long q = 1; q <= 6; ++q) CHECK(parse_rational(to_string(make_rational(p, q))) == make_rational(p, q));
}

TEST_CASE("pow") {
  CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
  CHECK(pow(Rational(0), 0) == 1);
  CHECK(pow(Rational(0), 2) == 0);
}

TEST_CASE("half integers and Pochhammer symbols") {
  CHECK(kOneHalf.to_rational() == make_rational(1, 2));
  CHECK(!kOneHalf.is_integer());
  CHECK(HalfInteger::from_integer(3).is_integer());
  CHECK((kOneHalf + 2).to_rational() == make_rational(5, 2));
  CHECK((-kOneHalf).to_rational() == make_rational(-1, 2));

  CHECK(pochhammer(kOneHalf, 0) == 1);
  CHECK(pochhammer(kOneHalf, 3) == make_rational(15, 8));
  CHECK(pochhammer(Rational(-2), 3) == 0);
  CHECK(pochhammer(Rational(4), 2) == 20);
  // Half-integer and Rational overloads agree.
  for (int twice = -9; twice <= 9; twice += 2)
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(pochhammer(HalfInteger::from_twice(twice), n) == pochhammer(make_rational(twice, 2), n));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25) == Integer("15511210043330985984000000"));
  CHECK_THROWS_AS(factorial(-1), std::domain_error);
  CHECK(sign_power(3) == -1);
  CHECK(sign_power(4) == 1);
}
