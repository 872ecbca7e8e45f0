#include "doctest.h"

#include "grelem/scalar.hpp"

#include "test_util.hpp"

using namespace grelem;

namespace {
const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();
}  // namespace

TEST_CASE("coefficient ring parsing and identity") {
  CHECK(CoeffRing::parse("int") == Z);
  CHECK(CoeffRing::parse("rat") == Q);
  CHECK(CoeffRing::parse("fp:7") == CoeffRing::prime_field(7));
  CHECK(CoeffRing::parse("fp:2").characteristic() == 2);
  CHECK(kind_of([] { CoeffRing::parse("fp:4"); }) == err::parse);
  CHECK(kind_of([] { CoeffRing::parse("zz"); }) == err::parse);
  CHECK(Z.name() == "int");
  CHECK(CoeffRing::prime_field(5).name() == "fp:5");
  CHECK_FALSE(Z.is_field());
  CHECK(Q.is_field());
}

TEST_CASE("scalar construction and normal forms") {
  CHECK(Scalar::from_string(Z, "5") == Scalar::of(Z, 5));
  CHECK(Scalar::from_string(Z, "-3") == Scalar::of(Z, -3));
  CHECK(Scalar::from_string(Z, "4/2") == Scalar::of(Z, 2));
  CHECK(kind_of([] { Scalar::from_string(Z, "3/2"); }) != "");

  const CoeffRing F5 = CoeffRing::prime_field(5);
  CHECK(Scalar::from_string(F5, "7") == Scalar::of(F5, 2));
  CHECK(Scalar::from_string(F5, "-1") == Scalar::of(F5, 4));
  CHECK(Scalar::from_string(F5, "1/2") == Scalar::of(F5, 3));  // 2 * 3 = 6 = 1 mod 5

  CHECK(Scalar::from_string(Q, "-6/4").to_string() == "-3/2");
}

TEST_CASE("scalar arithmetic") {
  const Scalar a = Scalar::from_string(Q, "2/3"), b = Scalar::from_string(Q, "1/6");
  CHECK((a + b).to_string() == "5/6");
  CHECK((a * b).to_string() == "1/9");
  CHECK((a - a).is_zero());
  CHECK((-a).to_string() == "-2/3");

  const CoeffRing F2 = CoeffRing::prime_field(2);
  CHECK((Scalar::one(F2) + Scalar::one(F2)).is_zero());
}

TEST_CASE("units, inverses, exact division") {
  CHECK(Scalar::of(Z, 1).is_unit());
  CHECK(Scalar::of(Z, -1).is_unit());
  CHECK_FALSE(Scalar::of(Z, 2).is_unit());
  CHECK(Scalar::of(Z, -1).inverse() == Scalar::of(Z, -1));
  CHECK(kind_of([] { Scalar::of(Z, 2).inverse(); }) == err::not_a_unit);
  CHECK(Scalar::of(Q, 2).inverse().to_string() == "1/2");
  CHECK(kind_of([] { Scalar::zero(Q).inverse(); }) == err::not_a_unit);

  CHECK(Scalar::of(Z, 6).div_exact(Scalar::of(Z, 3)) == Scalar::of(Z, 2));
  CHECK(kind_of([] { Scalar::of(Z, 5).div_exact(Scalar::of(Z, 3)); }) == err::not_divisible);
  CHECK(Scalar::of(Z, 6).divisible_by(Scalar::of(Z, 2)));
  CHECK_FALSE(Scalar::of(Z, 6).divisible_by(Scalar::of(Z, 4)));
}

TEST_CASE("powers and valuations") {
  CHECK(Scalar::of(Z, 2).pow(10) == Scalar::of(Z, 1024));
  CHECK(Scalar::of(Z, 7).pow(0) == Scalar::one(Z));
  CHECK(Scalar::of(Z, 24).valuation(Scalar::of(Z, 2), 10) == 3);
  CHECK(Scalar::of(Z, 7).valuation(Scalar::of(Z, 2), 10) == 0);
  CHECK(Scalar::zero(Z).valuation(Scalar::of(Z, 2), 5) == 5);  // capped for zero
  CHECK(Scalar::of(Z, 54).valuation(Scalar::of(Z, 3), 2) == 2);  // cap binds
}

TEST_CASE("ring mismatches are rejected") {
  CHECK(kind_of([] { Scalar::of(Z, 1) + Scalar::of(Q, 1); }) == err::ring_mismatch);
}
