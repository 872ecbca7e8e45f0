#include "doctest.h"

#include "grelem/poly.hpp"

#include "test_util.hpp"

using namespace grelem;

namespace {
const CoeffRing Z = CoeffRing::integers();
}

TEST_CASE("construction, degree, canonical term order") {
  const GradedPoly p = P("2 + 3*x + x^2", Z, 1);
  CHECK(p.degree() == 2);
  CHECK_FALSE(p.is_zero());
  CHECK(p.terms().size() == 3);
  CHECK(p.terms()[0].degree() == 0);
  CHECK(p.terms()[2].degree() == 2);
  CHECK(GradedPoly(Z, 2).degree() == -1);  // zero polynomial
  CHECK(p.to_string() == "2 + 3*x + x^2");
  CHECK(P("y + x").to_string() == "x + y");  // lex inside a degree
}

TEST_CASE("arithmetic and cancellation") {
  CHECK(P("x + y") + P("x - y") == P("2*x"));
  CHECK(P("x") - P("x") == GradedPoly(Z, 2));
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("x + 1", Z, 1).pow(3) == P("x^3 + 3*x^2 + 3*x + 1", Z, 1));
  CHECK(-P("x - y") == P("y - x"));
  CHECK(P("x").scale(Scalar::of(Z, -2)) == P("-2*x"));

  const CoeffRing F2 = CoeffRing::prime_field(2);
  CHECK(P("x + 1", F2, 1) * P("x + 1", F2, 1) == P("x^2 + 1", F2, 1));
}

TEST_CASE("plus evaluation is the grade-weighted substitution") {
  const GradedPoly p = P("2 + 3*x + x^2", Z, 1);
  CHECK(p.plus_eval(Scalar::of(Z, 5)) == P("2 + 15*x + 25*x^2", Z, 1));
  CHECK(p.plus_eval(Scalar::of(Z, 0)) == P("2", Z, 1));
  CHECK(p.plus_eval(Scalar::of(Z, 1)) == p);
  CHECK(P("x*y").plus_eval(Scalar::of(Z, 3)) == P("9*x*y"));  // degree 2 weight
}

TEST_CASE("iterated plus evaluation composes multiplicatively") {
  const GradedPoly b = P("1 + x + x*y + y^3");
  const Scalar s = Scalar::of(Z, 2), t = Scalar::of(Z, -3);
  CHECK(b.plus_eval(s).plus_eval(t) == b.plus_eval(s * t));
  CHECK(b.plus_eval(Scalar::zero(Z)) == b.homogeneous_component(0));
}

TEST_CASE("plus evaluation is a ring map") {
  const GradedPoly a = P("x + 2"), b = P("y^2 - x");
  const Scalar t = Scalar::of(Z, 4);
  CHECK((a * b).plus_eval(t) == a.plus_eval(t) * b.plus_eval(t));
  CHECK((a + b).plus_eval(t) == a.plus_eval(t) + b.plus_eval(t));
}

TEST_CASE("homogeneous decomposition") {
  const GradedPoly p = P("2 + 3*x + x^2 + x*y");
  CHECK(p.homogeneous_component(0) == P("2"));
  CHECK(p.homogeneous_component(1) == P("3*x"));
  CHECK(p.homogeneous_component(2) == P("x^2 + x*y"));
  CHECK(p.homogeneous_component(5).is_zero());
  CHECK(p.homogeneous_component(1).is_homogeneous());
  CHECK_FALSE(p.is_homogeneous());

  GradedPoly sum = GradedPoly(Z, 2);
  for (const auto& [deg, part] : p.grade_decompose()) {
    CHECK(part.is_homogeneous());
    CHECK(int(deg) == part.degree());
    sum = sum + part;
  }
  CHECK(sum == p);
}

TEST_CASE("formal-variable extension is a ring homomorphism") {
  const GradedPoly a = P("x", Z, 1), b = P("x + 1", Z, 1);
  CHECK(swan_weibel_extend(a * b) == swan_weibel_extend(a) * swan_weibel_extend(b));
  CHECK(swan_weibel_extend(a + b) == swan_weibel_extend(a) + swan_weibel_extend(b));
  // Degree-i slice sits at X^i: evaluating X = t recovers plus_eval.
  const GradedPoly p = P("2 + 3*x + x^2", Z, 1);
  CHECK(swan_weibel_extend(p).eval_at(Scalar::of(Z, 5)) == p.plus_eval(Scalar::of(Z, 5)));
  CHECK(swan_weibel_extend(p).x_degree() == 2);
  CHECK(swan_weibel_extend(p).coeff(1) == P("3*x", Z, 1));
}

TEST_CASE("exact division") {
  CHECK(P("x^2 - y^2").exact_div(P("x - y")) == P("x + y"));
  CHECK(P("2*x + 4*y").exact_div(P("2")) == P("x + 2*y"));
  CHECK(kind_of([] { P("x^2 + 1", Z, 1).exact_div(P("x", Z, 1)); }) == err::not_divisible);
  CHECK(kind_of([] { P("x").exact_div(GradedPoly(Z, 2)); }) != "");
}

TEST_CASE("coefficient-wise divisibility") {
  CHECK(P("2*x + 4*y").coeffs_divisible_by(Scalar::of(Z, 2)));
  CHECK_FALSE(P("2*x + 3*y").coeffs_divisible_by(Scalar::of(Z, 2)));
  CHECK(P("2*x + 4*y").coeffs_div_exact(Scalar::of(Z, 2)) == P("x + 2*y"));
}

TEST_CASE("add_term merges and validates") {
  GradedPoly p(Z, 2);
  p.add_term({1, 0}, Scalar::of(Z, 1));
  p.add_term({1, 0}, Scalar::of(Z, 1));
  CHECK(p == P("2*x"));
  p.add_term({1, 0}, Scalar::of(Z, -2));
  CHECK(p.is_zero());
  CHECK_THROWS(p.add_term({1}, Scalar::of(Z, 1)));  // wrong arity
}

TEST_CASE("constants and variables") {
  CHECK(GradedPoly::constant(Z, 2, 7) == P("7"));
  CHECK(GradedPoly::variable(Z, 2, 2) == P("y"));
  CHECK(GradedPoly::monomial(Z, 2, {1, 2}, Scalar::of(Z, 3)) == P("3*x*y^2"));
  CHECK(P("5").is_constant());
  CHECK(P("5").constant_term() == Scalar::of(Z, 5));
  CHECK(P("x + 5").constant_term() == Scalar::of(Z, 5));
}
