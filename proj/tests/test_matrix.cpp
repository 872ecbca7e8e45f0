#include "doctest.h"

#include "grelem/matrix.hpp"
#include "grelem/sample.hpp"
#include "grelem/words.hpp"

#include "test_util.hpp"

using namespace grelem;

namespace {
const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

MatP ident(unsigned n) { return MatP::identity(n, GradedPoly(Z, 2)); }
}

TEST_CASE("index involution") {
  CHECK(sigma(1, 6) == 2);
  CHECK(sigma(2, 6) == 1);
  CHECK(sigma(4, 6) == 3);
  CHECK(sigma(5, 6) == 6);
  CHECK(kind_of([] { sigma(7, 6); }) == err::structural);
  CHECK(kind_of([] { sigma(0, 6); }) == err::structural);
}

TEST_CASE("forms are built from 2x2 blocks") {
  const FormMatrix psi1 = form(1, FormKind::psi, Z, 2);
  CHECK(psi1.mat == M("0, 1; -1, 0"));
  const FormMatrix psit1 = form(1, FormKind::psi_tilde, Z, 2);
  CHECK(psit1.mat == M("0, 1; 1, 0"));

  const FormMatrix psi2 = form(2, FormKind::psi, Z, 2);
  CHECK(psi2.mat == M("0, 1, 0, 0; -1, 0, 0, 0; 0, 0, 0, 1; 0, 0, -1, 0"));
  CHECK(psi2.mat.transpose() == -psi2.mat);
  CHECK(form(3, FormKind::psi_tilde, Z, 2).mat.transpose() ==
        form(3, FormKind::psi_tilde, Z, 2).mat);
}

TEST_CASE("determinants agree between cofactor and condensation") {
  const FormMatrix psi2 = form(2, FormKind::psi, Z, 2);
  CHECK(det_cofactor(psi2.mat) == P("1"));
  CHECK(det_bareiss(psi2.mat) == P("1"));

  Sampler s(99);
  for (int t = 0; t < 5; ++t) {
    MatP a(5, GradedPoly(Z, 2));
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 0; j < 5; ++j) a.at(i, j) = s.poly(Z, 2, 2, 2);
    CHECK(det_bareiss(a) == det_cofactor(a));
  }
  // Condensation needs pivot swaps on zero leading minors.
  CHECK(det_bareiss(M("0, 1; 1, 0")) == P("-1"));
  CHECK(det_bareiss(M("0, x; 0, 1")).is_zero());
}

TEST_CASE("matrix arithmetic and transpose") {
  const MatP e12 = M("1, x, 0; 0, 1, 0; 0, 0, 1");
  const MatP e12m = M("1, -x, 0; 0, 1, 0; 0, 0, 1");
  CHECK(e12 * e12m == ident(3));
  CHECK(e12.transpose().at(1, 0) == P("x"));
  CHECK((e12 + e12m).at(0, 0) == P("2"));
  CHECK(e12.plus_eval(Scalar::of(Z, 0)) == ident(3));
  CHECK(M("1, 2 + x; 0, 1").plus_eval(Scalar::of(Z, 3)) == M("1, 2 + 3*x; 0, 1"));
}

TEST_CASE("inverse via adjugate, unit-constant determinants only") {
  const MatP e12 = M("1, x, 0; 0, 1, 0; 0, 0, 1");
  CHECK(inverse(e12) == M("1, -x, 0; 0, 1, 0; 0, 0, 1"));
  CHECK(kind_of([] { inverse(M("x, 0; 0, 1")); }) == err::not_invertible);
  CHECK(kind_of([] { inverse(M("2, 0; 0, 1")); }) == err::not_invertible);  // det 2 over ZZ
  CHECK(inverse(M("2, 0; 0, 1", Q)) == M("1/2, 0; 0, 1", Q));

  const MatP psi2 = form(2, FormKind::psi, Z, 2).mat;
  CHECK(inverse(psi2) == -psi2);

  CHECK(adjugate(ident(3)) == ident(3));
  CHECK(adjugate(M("2, 0; 0, 3")) == M("3, 0; 0, 2"));
}

TEST_CASE("inner products by case") {
  const VecP e1 = unit_vector(Z, 2, 4, 1), e2 = unit_vector(Z, 2, 4, 2);
  CHECK(inner_product(GroupCase::symplectic, e1, e2) == P("1"));
  CHECK(inner_product(GroupCase::symplectic, e2, e1) == P("-1"));
  CHECK(inner_product(GroupCase::symplectic, e1, e1).is_zero());
  CHECK(inner_product(GroupCase::orthogonal, e1, e2) == P("1"));
  CHECK(inner_product(GroupCase::orthogonal, e2, e1) == P("1"));
  CHECK(inner_product(GroupCase::orthogonal, e1, e1).is_zero());
  CHECK(inner_product(GroupCase::linear, e1, e1) == P("1"));
  CHECK(inner_product(GroupCase::linear, e1, e2).is_zero());
}

TEST_CASE("companion matrix M(v, w)") {
  const VecP e1 = unit_vector(Z, 2, 4, 1), e3 = unit_vector(Z, 2, 4, 3);
  VecP xe2(4, GradedPoly(Z, 2));
  xe2[1] = P("x");

  MatP lin = m_of(GroupCase::linear, e1, xe2);  // e1 w^T
  CHECK(lin.at(0, 1) == P("x"));
  lin.at(0, 1) = GradedPoly(Z, 2);
  CHECK(lin == MatP(4, GradedPoly(Z, 2)));

  // psi-tilde of e3 is e4; tilde of e1 is e2: M = e14 + e32.
  const MatP sp = m_of(GroupCase::symplectic, e1, e3);
  CHECK(sp.at(0, 3) == P("1"));
  CHECK(sp.at(2, 1) == P("1"));
  // orthogonal: e1 w~ - w e1~ = e14 - e32.
  const MatP ort = m_of(GroupCase::orthogonal, e1, e3);
  CHECK(ort.at(0, 3) == P("1"));
  CHECK(ort.at(2, 1) == P("-1"));
}

TEST_CASE("group membership") {
  const MatP e12 = M("1, x, 0; 0, 1, 0; 0, 0, 1");
  CHECK(is_in_G(GroupCase::linear, e12));
  CHECK(is_in_S(GroupCase::linear, e12));
  CHECK_FALSE(is_in_G(GroupCase::linear, M("x, 0, 0; 0, 1, 0; 0, 0, 1")));

  CHECK(is_in_G(GroupCase::linear, M("2, 0; 0, 1", Q)));
  CHECK_FALSE(is_in_S(GroupCase::linear, M("2, 0; 0, 1", Q)));
  CHECK_FALSE(is_in_G(GroupCase::linear, M("2, 0; 0, 1")));  // det 2 not a unit of ZZ

  const MatP se = gen_matrix_any<GradedPoly>(GroupCase::symplectic, 4, 1, 3, P("x"));
  CHECK(is_in_G(GroupCase::symplectic, se));
  CHECK(is_in_S(GroupCase::symplectic, se));
  // a short root without its correction term breaks the form
  CHECK_FALSE(is_in_G(GroupCase::symplectic, M("1, 0, x, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, 0, 0, 1")));

  CHECK(kind_of([] {
          is_in_G(GroupCase::symplectic, M("1, 0, 0; 0, 1, 0; 0, 0, 1"));
        }) == err::structural);  // odd size
}

TEST_CASE("congruence level by degree-0 parts") {
  CHECK(is_level_plus(M("1, x; 0, 1")));
  CHECK_FALSE(is_level_plus(M("1, 1 + x; 0, 1")));
  CHECK_FALSE(is_level_plus(M("2, x; 0, 1")));
}

TEST_CASE("case size gates") {
  CHECK(case_min_n(GroupCase::linear) == 3);
  CHECK(case_min_n(GroupCase::symplectic) == 6);
  CHECK(case_min_n(GroupCase::orthogonal) == 6);
  CHECK(kind_of([] { check_case_n(GroupCase::symplectic, 5); }) == err::structural);
  CHECK(kind_of([] { check_case_n(GroupCase::linear, 1); }) == err::structural);
  CHECK(kind_of([] { check_case_n(GroupCase::orthogonal, 4); }) == "");
}

TEST_CASE("rows and unit vectors") {
  const VecP row = row_times_mat(unit_vector(Z, 2, 3, 1), M("1, x, 0; 0, 1, 0; 0, 0, 1"));
  CHECK(row[0] == P("1"));
  CHECK(row[1] == P("x"));
  CHECK(row[2].is_zero());
}

TEST_CASE("case names round trip") {
  for (GroupCase c : {GroupCase::linear, GroupCase::symplectic, GroupCase::orthogonal})
    CHECK(case_parse(case_name(c)) == c);
  CHECK(kind_of([] { case_parse("unitary"); }) == err::parse);
}
