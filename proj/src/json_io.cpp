#include "grelem/json_io.hpp"

#include <fstream>

#include "grelem/parse.hpp"

namespace grelem::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(err::parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

unsigned uint_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) bad(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<unsigned>();
}

}  // namespace

json to_json(const GradedPoly& p) {
  json j;
  j["ring"] = p.ring().name();
  j["num_vars"] = p.num_vars();
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json exps = json::array();
    for (auto e : t.exps) exps.push_back(e);
    terms.push_back(json::array({exps, t.coeff.to_string()}));
  }
  j["terms"] = std::move(terms);
  return j;
}

GradedPoly poly_from_json(const json& j) {
  const CoeffRing ring = CoeffRing::parse(text_field(j, "ring"));
  const unsigned nv = uint_field(j, "num_vars");
  GradedPoly p(ring, nv);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("field 'terms' must be an array");
  for (const json& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || !t[1].is_string())
      bad("each term is [[exponents...], \"coeff\"]");
    std::vector<std::uint32_t> exps;
    for (const json& e : t[0]) {
      if (!e.is_number_unsigned()) bad("exponents must be nonnegative integers");
      exps.push_back(e.get<std::uint32_t>());
    }
    p.add_term(exps, Scalar::from_string(ring, t[1].get<std::string>()));
  }
  return p;
}

GradedPoly poly_from_json_or_text(const json& j, const CoeffRing& ring, unsigned nv) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), ring, nv);
  GradedPoly p = poly_from_json(j);
  if (!(p.ring() == ring) || p.num_vars() != nv)
    fail(err::ring_mismatch, "polynomial does not match the surrounding ring context");
  return p;
}

json to_json(const MatP& m) {
  json j;
  j["n"] = m.size();
  json rows = json::array();
  for (unsigned i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (unsigned k = 0; k < m.size(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

MatP matrix_from_json(const json& j) {
  const unsigned n = uint_field(j, "n");
  if (n == 0) bad("matrix size must be positive");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != n) bad("'entries' must hold n rows");
  for (const json& row : entries)
    if (!row.is_array() || row.size() != n) bad("every row must hold n entries");
  GradedPoly first = poly_from_json(entries[0][0]);
  MatP m(n, first.zero_like());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k)
      m.at(i, k) = poly_from_json_or_text(entries[i][k], first.ring(), first.num_vars());
  return m;
}

json to_json(const ElemWord& w) {
  json j;
  j["case"] = case_name(w.kase());
  j["n"] = w.n();
  j["ring"] = w.ring().name();
  j["num_vars"] = w.num_vars();
  json gens = json::array();
  for (const ElemGen& g : w.gens()) {
    json e;
    e["i"] = g.i;
    e["j"] = g.j;
    e["arg"] = to_json(g.arg);
    gens.push_back(std::move(e));
  }
  j["gens"] = std::move(gens);
  return j;
}

ElemWord word_from_json(const json& j) {
  const GroupCase c = case_parse(text_field(j, "case"));
  const unsigned n = uint_field(j, "n");
  const json& gens = field(j, "gens");
  if (!gens.is_array()) bad("field 'gens' must be an array");

  CoeffRing ring = CoeffRing::integers();
  unsigned nv = 0;
  if (j.contains("ring")) {
    ring = CoeffRing::parse(text_field(j, "ring"));
    nv = uint_field(j, "num_vars");
  } else if (!gens.empty()) {
    GradedPoly first = poly_from_json(field(gens[0], "arg"));
    ring = first.ring();
    nv = first.num_vars();
  } else {
    bad("an empty word needs explicit 'ring' and 'num_vars'");
  }

  ElemWord w(c, n, ring, nv);
  for (const json& g : gens)
    w.append(uint_field(g, "i"), uint_field(g, "j"),
             poly_from_json_or_text(field(g, "arg"), ring, nv));
  return w;
}

json to_json(const Witness& w) {
  json j;
  j["target"] = to_json(w.target);
  json factors = json::array();
  for (const auto& [label, m] : w.factors) {
    json f;
    f["label"] = label;
    f["matrix"] = to_json(m);
    factors.push_back(std::move(f));
  }
  j["factors"] = std::move(factors);
  j["checked"] = w.checked;
  return j;
}

json to_json(const ConjugatedWord& cw) {
  json j;
  j["case"] = case_name(cw.kase);
  j["n"] = cw.n;
  json pairs = json::array();
  for (const auto& [conj, core] : cw.pairs) {
    json p;
    p["conjugator"] = to_json(conj);
    json g;
    g["i"] = core.i;
    g["j"] = core.j;
    g["arg"] = to_json(core.arg);
    p["core"] = std::move(g);
    pairs.push_back(std::move(p));
  }
  j["pairs"] = std::move(pairs);
  j["residual"] = to_json(cw.residual);
  return j;
}

json to_json(const PatchWitness& pw) {
  json j;
  j["target"] = to_json(pw.target);
  json b = json::array();
  for (std::size_t i = 0; i < pw.cd.s.size(); ++i) {
    json e;
    e["s"] = pw.cd.s[i].to_string();
    e["l"] = pw.cd.l[i];
    e["c"] = pw.cd.c[i].to_string();
    b.push_back(std::move(e));
  }
  j["b"] = std::move(b);
  json factors = json::array();
  for (const auto& f : pw.factors) {
    json e;
    e["matrix"] = to_json(f.m);
    if (f.cert) {
      json c;
      c["s"] = f.cert->s.to_string();
      c["l"] = f.cert->l;
      c["kind"] = f.cert->kind;
      c["checked"] = f.cert->checked;
      e["certificate"] = std::move(c);
    }
    factors.push_back(std::move(e));
  }
  j["factors"] = std::move(factors);
  j["checked"] = pw.checked;
  return j;
}

json to_json(const Report& r, bool timing) {
  json j;
  j["suite"] = r.suite;
  if (!r.params.empty()) j["params"] = r.params;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  json fails = json::array();
  for (const Failure& f : r.failures) {
    json e;
    e["input"] = f.input;
    e["expected"] = f.expected;
    e["got"] = f.got;
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace grelem::io
