#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grex/field.hpp"

using namespace grex;

TEST_CASE("prime field arithmetic is canonical") {
  Fp a = Fp::make(3, 5), b = Fp::make(4, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((a / b).value() == 2);  // 3 * 4^-1 = 3*4 = 12 = 2 mod 5
  CHECK((-a).value() == 2);
  CHECK(a.inv().value() == 2);
  CHECK(Fp::make(-7, 5).value() == 3);
}

TEST_CASE("unattached literals adopt a modulus") {
  Fp one(1), x = Fp::make(4, 7);
  CHECK((one + x).value() == 5);
  CHECK((one + x).modulus() == 7);
  CHECK((Fp(0) * x).is_zero());
  CHECK(Fp(0) == Fp::make(0, 7));
  CHECK(Fp(-1) * x == Fp::make(3, 7));
  CHECK_THROWS_AS(Fp::make(1, 5) + Fp::make(1, 7), FieldError);
}

TEST_CASE("FieldSpec validates primality") {
  CHECK_NOTHROW(FieldSpec(32003));
  CHECK_NOTHROW(FieldSpec(2));
  CHECK_THROWS_AS(FieldSpec(32001), FieldError);  // 3*10667
  CHECK_THROWS_AS(FieldSpec(1), FieldError);
  CHECK(FieldSpec().is_rational());
}

TEST_CASE("rationals are exact and canonical") {
  Rat a(1, 3), b(1, 6);
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK(Rat(2, -4).str() == "-1/2");
  CHECK(Rat(0).is_zero());
  CHECK((Rat(1, 3) + Rat(2, 3)) == Rat(1));
  CHECK_THROWS_AS(Rat(1) / Rat(0), FieldError);
}
