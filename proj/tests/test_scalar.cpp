#include <doctest.h>

#include "qhalg/scalar.hpp"

using namespace qhalg;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = q.parse("1/3"), b = q.parse("2/3");
  CHECK(a + b == q.one());
  CHECK((a * b).str() == "2/9");
  CHECK((a / b).str() == "1/2");
  CHECK((-a).str() == "-1/3");
  CHECK(q.parse("4/6").str() == "2/3");
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(3);
  CHECK(f.from_int(2) + f.from_int(2) == f.one());
  CHECK(f.from_int(2).inverse() == f.from_int(2));
  CHECK(f.from_int(-1).str() == "2");
  CHECK(f.parse("1/2") == f.from_int(2));
  CHECK_THROWS(f.parse("1/3"));
}

TEST_CASE("agnostic zero mixes with residues") {
  Field f = Field::prime(5);
  Scalar z;
  CHECK(z.is_zero());
  CHECK(z + f.from_int(3) == f.from_int(3));
  CHECK(f.from_int(5).is_zero());
}

TEST_CASE("mixing two primes is rejected") {
  CHECK_THROWS(Field::prime(2).one() + Field::prime(3).one());
  CHECK_THROWS(Field::prime(4));
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS(Field::rationals().zero().inverse());
  CHECK_THROWS(Field::prime(7).zero().inverse());
}
