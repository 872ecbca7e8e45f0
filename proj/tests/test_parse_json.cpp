#include "doctest.h"

#include "grelem/json_io.hpp"
#include "grelem/parse.hpp"

#include "test_util.hpp"

using namespace grelem;

namespace {
const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();
}

TEST_CASE("polynomial grammar") {
  CHECK(P("2 + 3*x + x^2", Z, 1).degree() == 2);
  CHECK(P("x1*x2^2 - 4") == P("x*y^2 - 4"));
  CHECK(P("-x") == -P("x"));
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("2*(x - y) + y") == P("2*x - y"));
  CHECK(P("1/2", Q, 1).constant_term().to_string() == "1/2");
  CHECK(P("7", CoeffRing::prime_field(5), 1) == P("2", CoeffRing::prime_field(5), 1));
  CHECK(parse_poly("x1 + x4", Z, 4).num_vars() == 4);
}

TEST_CASE("grammar errors carry positions and kinds") {
  CHECK(kind_of([] { parse_poly("x4", Z, 3); }) == err::parse);
  CHECK(kind_of([] { parse_poly("z", Z, 4); }) == err::parse);  // aliases only up to 3 vars
  CHECK(kind_of([] { parse_poly("2/", Z, 1); }) == err::parse);
  CHECK(kind_of([] { parse_poly("^2", Z, 1); }) == err::parse);
  CHECK(kind_of([] { parse_poly("x +", Z, 1); }) == err::parse);
  CHECK(kind_of([] { parse_poly("(x", Z, 1); }) == err::parse);
  CHECK(kind_of([] { parse_poly("x^70", Z, 1); }) == err::parse);  // exponent cap
  CHECK(kind_of([] { parse_poly("1/2", Z, 1); }) != "");           // not integral
}

TEST_CASE("matrix and vector literals") {
  const MatP m = M("1, x; 0, 1");
  CHECK(m.size() == 2);
  CHECK(m.at(0, 1) == P("x"));
  CHECK(m.at(1, 1) == P("1"));
  CHECK(kind_of([] { M("1, x; 0"); }) == err::parse);  // ragged
  const VecP v = parse_vector("x, 0, y", Z, 2);
  CHECK(v.size() == 3);
  CHECK(v[2] == P("y"));
}

TEST_CASE("polynomial JSON round trip and frozen shape") {
  const GradedPoly p = P("2 + 3*x", Z, 1);
  const auto j = io::to_json(p);
  CHECK(j.dump() == R"({"ring":"int","num_vars":1,"terms":[[[0],"2"],[[1],"3"]]})");
  CHECK(io::poly_from_json(j) == p);

  const GradedPoly q = P("x*y^2 - 1/2", Q, 2);
  CHECK(io::poly_from_json(io::to_json(q)) == q);
}

TEST_CASE("matrix JSON round trip") {
  const MatP m = M("1, x + y; 0, 1");
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK(io::to_json(m)["n"] == 2);
}

TEST_CASE("word JSON round trip") {
  ElemWord w(GroupCase::symplectic, 6, Z, 2);
  w.append(1, 3, P("x*y"));
  w.append(3, 1, P("2"));  // stored canonically
  const auto j = io::to_json(w);
  CHECK(j["case"] == "symplectic");
  CHECK(j["n"] == 6);
  const ElemWord back = io::word_from_json(j);
  CHECK(back.eval() == w.eval());
  CHECK(back.gens().size() == 2);
}

TEST_CASE("witness and report JSON shapes") {
  ElemWord w(GroupCase::linear, 3, Z, 2);
  w.append(1, 2, P("x"));
  const Witness wit = make_witness_checked(w.eval(), {{"whole", w.eval()}});
  const auto j = io::to_json(wit);
  CHECK(j["checked"] == true);
  CHECK(j["factors"].size() == 1);
  CHECK(j["factors"][0]["label"] == "whole");

  Report r;
  r.suite = "splitting";
  r.trials = 5;
  r.elapsed_ms = 12.5;
  CHECK(io::to_json(r, false).contains("elapsed_ms") == false);
  CHECK(io::to_json(r, true)["elapsed_ms"] == 12.5);
  CHECK(io::to_json(r, false)["verdict"] == "pass");
  r.failures.push_back({"in", "want", "got"});
  CHECK(io::to_json(r, false)["verdict"] == "fail");
}

TEST_CASE("malformed JSON inputs are parse errors") {
  CHECK(kind_of([] { io::poly_from_json(io::json::parse(R"({"ring":"int"})")); }) == err::parse);
  CHECK(kind_of([] {
          io::poly_from_json(io::json::parse(R"({"ring":"int","num_vars":1,"terms":[[[0]]]})"));
        }) == err::parse);
  CHECK(kind_of([] {
          io::word_from_json(io::json::parse(R"({"case":"linear","n":3,"gens":[]})"));
        }) == err::parse);  // empty word without ring context
  CHECK(kind_of([] { io::load_json_file("/nonexistent/path.json"); }) == err::parse);
}

TEST_CASE("word JSON validates generator indices") {
  const auto j = io::json::parse(
      R"({"case":"orthogonal","n":6,"ring":"int","num_vars":2,
          "gens":[{"i":1,"j":2,"arg":"x"}]})");
  CHECK(kind_of([&] { io::word_from_json(j); }) == err::structural);  // i = sigma(j)
}
