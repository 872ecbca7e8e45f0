#include "doctest.h"

#include <tuple>

#include "grelem/words.hpp"

#include "test_util.hpp"

using namespace grelem;

namespace {
const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

ElemWord word_of(GroupCase c, unsigned n,
                 std::initializer_list<std::tuple<unsigned, unsigned, const char*>> gens,
                 CoeffRing ring = CoeffRing::integers()) {
  ElemWord w(c, n, ring, 2);
  for (const auto& [i, j, a] : gens) w.append(i, j, parse_poly(a, ring, 2));
  return w;
}
}

TEST_CASE("generator matrices, frozen entries") {
  CHECK(word_of(GroupCase::linear, 3, {{2, 1, "x"}}).eval() ==
        M("1, 0, 0; x, 1, 0; 0, 0, 1"));
  // long root: i = sigma(j)
  CHECK(word_of(GroupCase::symplectic, 4, {{1, 2, "x"}}).eval() ==
        M("1, x, 0, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, 0, 0, 1"));
  // short root i < j: correction -(-1)^{i+j} z at (sigma(j), sigma(i))
  CHECK(word_of(GroupCase::symplectic, 4, {{1, 3, "x"}}).eval() ==
        M("1, 0, x, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, -x, 0, 1"));
  CHECK(word_of(GroupCase::orthogonal, 6, {{1, 3, "x"}}).eval() ==
        M("1, 0, x, 0, 0, 0;"
          "0, 1, 0, 0, 0, 0;"
          "0, 0, 1, 0, 0, 0;"
          "0, -x, 0, 1, 0, 0;"
          "0, 0, 0, 0, 1, 0;"
          "0, 0, 0, 0, 0, 1"));
}

TEST_CASE("i > j rewrites to the canonical index pair") {
  const ElemWord w = word_of(GroupCase::symplectic, 4, {{3, 1, "x"}});
  REQUIRE(w.gens().size() == 1);
  CHECK(w.gens()[0].i == 2);
  CHECK(w.gens()[0].j == 4);
  CHECK(w.gens()[0].arg == P("-x"));
  CHECK(w.eval() == M("1, 0, 0, 0; 0, 1, 0, -x; x, 0, 1, 0; 0, 0, 0, 1"));

  const ElemWord o = word_of(GroupCase::orthogonal, 6, {{3, 1, "x"}});
  REQUIRE(o.gens().size() == 1);
  CHECK(o.gens()[0].i == 2);
  CHECK(o.gens()[0].j == 4);
  CHECK(o.gens()[0].arg == P("-x"));
  CHECK(o.eval() == word_of(GroupCase::orthogonal, 6, {{2, 4, "-x"}}).eval());
}

TEST_CASE("generators preserve the case") {
  for (auto [i, j] : {std::pair{1u, 3u}, {1u, 4u}, {2u, 3u}, {1u, 2u}, {5u, 2u}}) {
    ElemWord w(GroupCase::symplectic, 6, Z, 2);
    w.append(i, j, P("x + 2*y"));
    CHECK(is_in_S(GroupCase::symplectic, w.eval()));
  }
  for (auto [i, j] : {std::pair{1u, 3u}, {1u, 4u}, {2u, 3u}, {5u, 2u}}) {
    ElemWord w(GroupCase::orthogonal, 6, Z, 2);
    w.append(i, j, P("x + 2*y"));
    CHECK(is_in_S(GroupCase::orthogonal, w.eval()));
  }
}

TEST_CASE("index validation") {
  CHECK(kind_of([] { word_of(GroupCase::orthogonal, 6, {{1, 2, "x"}}); }) == err::structural);
  CHECK(kind_of([] { word_of(GroupCase::linear, 3, {{2, 2, "x"}}); }) == err::structural);
  CHECK(kind_of([] { word_of(GroupCase::linear, 3, {{1, 4, "x"}}); }) == err::structural);
  CHECK(kind_of([] { ElemWord(GroupCase::symplectic, 5, Z, 2); }) == err::structural);
  CHECK(kind_of([] {
          ElemWord(GroupCase::orthogonal, 6, CoeffRing::prime_field(2), 2);
        }) == err::unsupported_ring);
  CHECK(kind_of([] { ElemWord(GroupCase::symplectic, 6, CoeffRing::prime_field(2), 2); }) == "");
  CHECK(kind_of([] {
          ElemWord w(GroupCase::linear, 3, Z, 2);
          w.append(1, 2, parse_poly("x", CoeffRing::rationals(), 2));
        }) == err::ring_mismatch);
}

TEST_CASE("word group laws") {
  const ElemWord w =
      word_of(GroupCase::symplectic, 6, {{1, 3, "x"}, {1, 2, "2"}, {4, 1, "y"}});
  CHECK(w.concat(w.inverse()).eval().is_identity());
  CHECK(w.inverse().concat(w).eval().is_identity());

  const ElemWord c = word_of(GroupCase::symplectic, 6, {{2, 5, "1 + x"}});
  CHECK(w.conjugated_by(c).eval() == c.eval() * w.eval() * inverse(c.eval()));

  const ElemWord empty(GroupCase::linear, 4, Q, 2);
  CHECK(empty.eval().is_identity());
  CHECK(empty.empty());
}

TEST_CASE("splitting a word at degree 0, frozen") {
  const ElemWord a = word_of(GroupCase::linear, 3, {{1, 2, "x"}});
  const ElemWord sa = split_word(a);
  REQUIRE(sa.gens().size() == 2);
  CHECK(sa.gens()[0].arg.is_zero());
  CHECK(sa.gens()[1].arg == P("x"));
  CHECK(sa.eval() == a.eval());

  const ElemWord b = word_of(GroupCase::linear, 3, {{1, 2, "2 + x"}});
  const ElemWord sb = split_word(b);
  REQUIRE(sb.gens().size() == 2);
  CHECK(sb.gens()[0].arg == P("2"));
  CHECK(sb.gens()[1].arg == P("x"));
  CHECK(sb.eval() == b.eval());

  const ElemWord c = word_of(GroupCase::symplectic, 6, {{1, 3, "1 + x*y"}});
  const ElemWord sc = split_word(c);
  REQUIRE(sc.gens().size() == 2);
  CHECK(sc.gens()[0].arg == P("1"));
  CHECK(sc.gens()[1].arg == P("x*y"));
  CHECK(sc.eval() == c.eval());
}

TEST_CASE("argument-wise substitution into a word") {
  const ElemWord w = word_of(GroupCase::linear, 3, {{1, 2, "2 + x"}, {2, 3, "x^2"}});
  const ElemWord w3 = w.plus_eval(Scalar::of(Z, 3));
  REQUIRE(w3.gens().size() == 2);
  CHECK(w3.gens()[0].arg == P("2 + 3*x"));
  CHECK(w3.gens()[1].arg == P("9*x^2"));
  CHECK(w3.eval() == w.eval().plus_eval(Scalar::of(Z, 3)));
  // zero arguments are dropped rather than kept as trivial generators
  CHECK(word_of(GroupCase::linear, 3, {{1, 2, "x"}}).plus_eval(Scalar::zero(Z)).empty());
}

TEST_CASE("normalization pushes degree-0 parts into conjugators") {
  SUBCASE("already level") {
    const ElemWord w = word_of(GroupCase::linear, 3, {{1, 2, "x"}});
    const ConjugatedWord nf = normalize_mod_plus(w);
    REQUIRE(nf.pairs.size() == 1);
    CHECK(nf.pairs[0].first.eval().is_identity());
    CHECK(nf.pairs[0].second.i == 1);
    CHECK(nf.pairs[0].second.j == 2);
    CHECK(nf.pairs[0].second.arg == P("x"));
    CHECK(nf.residual.eval().is_identity());
  }
  SUBCASE("conjugator collects earlier degree-0 parts") {
    const ElemWord w = word_of(GroupCase::linear, 3, {{1, 2, "2"}, {1, 3, "x"}, {1, 2, "-2"}});
    const ConjugatedWord nf = normalize_mod_plus(w);
    REQUIRE(nf.pairs.size() == 1);
    CHECK(nf.pairs[0].first.eval() == M("1, 2, 0; 0, 1, 0; 0, 0, 1"));
    CHECK(nf.pairs[0].second.arg == P("x"));
    CHECK(nf.residual.eval().is_identity());
    // reassemble: conj core conj^-1 must reproduce the word
    const MatP e = nf.pairs[0].first.eval();
    CHECK(e * gen_matrix(GroupCase::linear, 3, nf.pairs[0].second) * inverse(e) == w.eval());
  }
  SUBCASE("mixed-degree argument splits in place") {
    const ElemWord w = word_of(GroupCase::symplectic, 6, {{1, 3, "1 + x*y"}, {1, 3, "-1"}});
    const ConjugatedWord nf = normalize_mod_plus(w);
    REQUIRE(nf.pairs.size() == 1);
    CHECK(nf.pairs[0].first.eval() ==
          word_of(GroupCase::symplectic, 6, {{1, 3, "1"}}).eval());
    CHECK(nf.pairs[0].second.arg == P("x*y"));
    CHECK(nf.residual.eval().is_identity());
  }
  SUBCASE("rejects words outside the level") {
    CHECK(kind_of([] {
            normalize_mod_plus(word_of(GroupCase::linear, 3, {{1, 2, "2"}}));
          }) == err::not_level);
  }
  SUBCASE("rejects sizes below the stable range") {
    CHECK(kind_of([] {
            normalize_mod_plus(word_of(GroupCase::linear, 2, {{1, 2, "x"}}));
          }) == err::structural);
    CHECK(kind_of([] {
            normalize_mod_plus(word_of(GroupCase::symplectic, 4, {{1, 3, "x"}}));
          }) == err::structural);
  }
}

TEST_CASE("product rearrangement witness") {
  const MatP a = word_of(GroupCase::linear, 3, {{1, 2, "x"}}).eval();
  const MatP b = word_of(GroupCase::linear, 3, {{2, 3, "y"}}).eval();
  const Witness w = rearrange_product({{a, b}});
  CHECK(w.checked);
  CHECK(w.target == a * b);
  REQUIRE(w.factors.size() == 2);
  CHECK(w.factors[0].second == a * b * inverse(a));
  CHECK(w.factors[1].second == a);

  const MatP id = MatP::identity(3, GradedPoly(Z, 2));
  const Witness w2 = rearrange_product({{a, id}, {b, id}});
  CHECK(w2.checked);
  CHECK(w2.target == a * b);
  REQUIRE(w2.factors.size() == 4);
  CHECK(w2.factors[0].second.is_identity());
  CHECK(w2.factors[1].second.is_identity());
  CHECK(w2.factors[2].second == a);
  CHECK(w2.factors[3].second == b);

  CHECK(kind_of([] { rearrange_product({}); }) == err::structural);
}

TEST_CASE("transvection words at e1, frozen") {
  SUBCASE("linear") {
    VecP w(3, GradedPoly(Z, 2));
    w[1] = P("x");
    w[2] = P("2*y");
    const ElemWord tw = transvection_word(GroupCase::linear, w);
    REQUIRE(tw.gens().size() == 2);
    CHECK(tw.gens()[0].j == 2);
    CHECK(tw.gens()[0].arg == P("x"));
    CHECK(tw.gens()[1].j == 3);
    CHECK(tw.gens()[1].arg == P("2*y"));
    CHECK(tw.eval() == MatP::identity(3, GradedPoly(Z, 2)) +
                           m_of(GroupCase::linear, unit_vector(Z, 2, 3, 1), w));
  }
  SUBCASE("zero vector gives the empty word") {
    CHECK(transvection_word(GroupCase::linear, VecP(3, GradedPoly(Z, 2))).empty());
    CHECK(transvection_word(GroupCase::symplectic, VecP(6, GradedPoly(Z, 2))).empty());
  }
  SUBCASE("symplectic") {
    VecP w(6, GradedPoly(Z, 2));
    w[2] = P("x");  // w = x e_3
    const ElemWord tw = transvection_word(GroupCase::symplectic, w);
    REQUIRE(tw.gens().size() == 1);
    CHECK(tw.gens()[0].i == 1);
    CHECK(tw.gens()[0].j == 4);
    CHECK(tw.gens()[0].arg == P("x"));
    CHECK(tw.eval() == MatP::identity(6, GradedPoly(Z, 2)) +
                           m_of(GroupCase::symplectic, unit_vector(Z, 2, 6, 1), w));
    // the long-root corner carries 2 w_1 plus the cross terms
    VecP u(6, GradedPoly(Z, 2));
    u[0] = P("y");
    u[2] = P("1");
    u[3] = P("x");
    const ElemWord tu = transvection_word(GroupCase::symplectic, u);
    CHECK(tu.eval() == MatP::identity(6, GradedPoly(Z, 2)) +
                           m_of(GroupCase::symplectic, unit_vector(Z, 2, 6, 1), u));
  }
  SUBCASE("orthogonal") {
    VecP w(6, GradedPoly(Z, 2));
    w[3] = P("y");  // w = y e_4
    const ElemWord tw = transvection_word(GroupCase::orthogonal, w);
    REQUIRE(tw.gens().size() == 1);
    CHECK(tw.gens()[0].i == 1);
    CHECK(tw.gens()[0].j == 3);
    CHECK(tw.gens()[0].arg == P("y"));
    CHECK(tw.eval() == MatP::identity(6, GradedPoly(Z, 2)) +
                           m_of(GroupCase::orthogonal, unit_vector(Z, 2, 6, 1), w));
  }
  SUBCASE("pairing and isotropy violations") {
    VecP w(6, GradedPoly(Z, 2));
    w[1] = P("1");  // <e1, w> = w_2 != 0
    CHECK(kind_of([&] { transvection_word(GroupCase::symplectic, w); }) == err::orthogonality);
    VecP u(6, GradedPoly(Z, 2));
    u[2] = P("1");
    u[3] = P("1");  // <u, u> = 2 != 0
    CHECK(kind_of([&] { transvection_word(GroupCase::orthogonal, u); }) == err::orthogonality);
    CHECK(kind_of([] {
            transvection_word(GroupCase::linear, VecP(2, GradedPoly(Z, 2)));
          }) == err::structural);
  }
}

TEST_CASE("transvections at a transported base point") {
  SUBCASE("trivial conjugator reduces to the plain word") {
    VecP w(6, GradedPoly(Z, 2));
    w[2] = P("x");
    const ElemWord eps(GroupCase::symplectic, 6, Z, 2);
    const Witness wit = transvection_word_conj(eps, w);
    CHECK(wit.checked);
    CHECK(wit.target == MatP::identity(6, GradedPoly(Z, 2)) +
                            m_of(GroupCase::symplectic, unit_vector(Z, 2, 6, 1), w));
    REQUIRE(wit.factors.size() == 3);
    CHECK(wit.factors[0].second.is_identity());
    CHECK(wit.factors[2].second.is_identity());
  }
  SUBCASE("linear transport through the transpose") {
    ElemWord eps(GroupCase::linear, 3, Z, 2);
    eps.append(2, 1, P("1"));  // v = e1 + e2
    VecP w(3, GradedPoly(Z, 2));
    w[0] = P("x");
    w[1] = P("-x");  // <v, w> = 0
    w[2] = P("y");
    const Witness wit = transvection_word_conj(eps, w);
    CHECK(wit.checked);
    VecP v(3, GradedPoly(Z, 2));
    v[0] = P("1");
    v[1] = P("1");
    CHECK(wit.target == MatP::identity(3, GradedPoly(Z, 2)) + m_of(GroupCase::linear, v, w));
  }
  SUBCASE("symplectic transport through the inverse") {
    ElemWord eps(GroupCase::symplectic, 6, Z, 2);
    eps.append(1, 3, P("1"));
    eps.append(1, 2, P("2"));
    VecP w(6, GradedPoly(Z, 2));
    w[4] = P("x*y");
    const MatP e = eps.eval();
    VecP v(6, GradedPoly(Z, 2));
    for (unsigned i = 0; i < 6; ++i) v[i] = e.at(i, 0);
    REQUIRE(inner_product(GroupCase::symplectic, v, w).is_zero());
    const Witness wit = transvection_word_conj(eps, w);
    CHECK(wit.checked);
    CHECK(wit.target == MatP::identity(6, GradedPoly(Z, 2)) +
                            m_of(GroupCase::symplectic, v, w));
  }
  SUBCASE("pairing violation reported against the transported point") {
    ElemWord eps(GroupCase::linear, 3, Z, 2);
    eps.append(2, 1, P("1"));
    VecP w(3, GradedPoly(Z, 2));
    w[0] = P("1");  // <e1 + e2, w> = 1
    CHECK(kind_of([&] { transvection_word_conj(eps, w); }) == err::orthogonality);
  }
}

TEST_CASE("commutator four-factor rewriting") {
  const MatP alpha = word_of(GroupCase::linear, 3, {{1, 2, "2 + x"}}).eval();
  const MatP beta = word_of(GroupCase::linear, 3, {{2, 3, "x"}}).eval();
  const ElemWord a0w = word_of(GroupCase::linear, 3, {{1, 2, "2"}});
  const ElemWord b0w(GroupCase::linear, 3, Z, 2);
  const Witness wit = commutator_factor(GroupCase::linear, alpha, beta, a0w, b0w);
  CHECK(wit.checked);
  CHECK(wit.target == alpha * beta * inverse(alpha) * inverse(beta));
  REQUIRE(wit.factors.size() == 4);
  // first factor is the commutator of the level parts
  CHECK(wit.factors[0].second.plus_eval(Scalar::zero(Z)).is_identity());

  SUBCASE("symplectic") {
    const MatP sa = word_of(GroupCase::symplectic, 6, {{1, 3, "1 + x"}}).eval();
    const MatP sb = word_of(GroupCase::symplectic, 6, {{1, 4, "y"}}).eval();
    const ElemWord sa0 = word_of(GroupCase::symplectic, 6, {{1, 3, "1"}});
    const ElemWord sb0(GroupCase::symplectic, 6, Z, 2);
    const Witness sw = commutator_factor(GroupCase::symplectic, sa, sb, sa0, sb0);
    CHECK(sw.checked);
    CHECK(sw.target == sa * sb * inverse(sa) * inverse(sb));
  }
  SUBCASE("rejects inputs outside S") {
    CHECK(kind_of([&] {
            commutator_factor(GroupCase::linear, M("2, 0, 0; 0, 1, 0; 0, 0, 1", Q), beta,
                              ElemWord(GroupCase::linear, 3, Q, 2),
                              ElemWord(GroupCase::linear, 3, Q, 2));
          }) == err::precondition);
  }
  SUBCASE("rejects words that miss the degree-0 part") {
    CHECK(kind_of([&] {
            commutator_factor(GroupCase::linear, alpha, beta, b0w, b0w);
          }) == err::precondition);
  }
}

TEST_CASE("commutator normal form") {
  const MatP a = word_of(GroupCase::linear, 3, {{1, 2, "1 + x"}}).eval();
  const MatP b = word_of(GroupCase::linear, 3, {{2, 3, "x"}}).eval();
  SUBCASE("trivial tail") {
    const ElemWord eps(GroupCase::linear, 3, Z, 2);
    const Witness wit = commutator_normal_form(GroupCase::linear, {{a, b}}, eps);
    CHECK(wit.checked);
    CHECK(wit.target == a * b * inverse(a) * inverse(b));
    REQUIRE(wit.factors.size() == 2);
    CHECK(wit.factors[0].second.plus_eval(Scalar::zero(Z)).is_identity());
    CHECK(wit.factors[1].first == "residual");
    CHECK(wit.factors[1].second.plus_eval(Scalar::zero(Z)).is_identity());
  }
  SUBCASE("level tail word") {
    const ElemWord eps = word_of(GroupCase::linear, 3, {{1, 3, "x^2"}});
    const Witness wit = commutator_normal_form(GroupCase::linear, {{a, b}, {b, a}}, eps);
    CHECK(wit.checked);
    REQUIRE(wit.factors.size() == 3);
    for (const auto& [label, f] : wit.factors)
      CHECK(f.plus_eval(Scalar::zero(Z)).is_identity());
  }
  SUBCASE("rejects assemblies outside the level") {
    CHECK(kind_of([&] {
            commutator_normal_form(GroupCase::linear, {{a, b}},
                                   word_of(GroupCase::linear, 3, {{1, 2, "1"}}));
          }) == err::not_level);
  }
  SUBCASE("rejects empty input") {
    CHECK(kind_of([&] {
            commutator_normal_form(GroupCase::linear, {}, ElemWord(GroupCase::linear, 3, Z, 2));
          }) == err::structural);
  }
}
