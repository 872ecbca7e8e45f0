#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grelem/json_io.hpp"
#include "grelem/parse.hpp"
#include "grelem/sample.hpp"
#include "grelem/suites.hpp"

namespace {

using grelem::io::json;

struct CommonOpts {
  std::string case_str, ring_str;
  unsigned n = 0;
  unsigned vars = 2;
  std::uint64_t seed = 7;
  unsigned trials = 0;
  std::vector<std::uint64_t> primes;
  std::string input;
  bool want_json = false;  // output is JSON either way; flag kept for symmetry
  bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--case", o.case_str, "group case: linear | symplectic | orthogonal");
  cmd->add_option("--n", o.n, "matrix size");
  cmd->add_option("--ring", o.ring_str, "coefficient ring: int | rat | fp:<p>");
  cmd->add_option("--vars", o.vars, "number of graded variables")->capture_default_str();
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--trials", o.trials, "trial count override");
  cmd->add_option("--primes", o.primes, "comma-separated primes")->delimiter(',');
  cmd->add_option("--input", o.input, "input JSON file");
  cmd->add_flag("--json", o.want_json, "emit JSON (always on)");
  cmd->add_flag("--no-timing", o.no_timing, "omit elapsed time from reports");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

grelem::SuiteOptions suite_options(const CommonOpts& o, unsigned dilation_exponent,
                                   bool dilation_set) {
  grelem::SuiteOptions opt;
  if (!o.case_str.empty()) opt.kase = grelem::case_parse(o.case_str);
  if (o.n != 0) opt.n = o.n;
  if (!o.ring_str.empty()) opt.ring = grelem::CoeffRing::parse(o.ring_str);
  opt.num_vars = o.vars;
  opt.seed = o.seed;
  if (o.trials != 0) opt.trials = o.trials;
  if (!o.primes.empty()) opt.primes = o.primes;
  if (dilation_set) opt.dilation_exponent = dilation_exponent;
  return opt;
}

// Inputs may supply a matrix directly or as a word to evaluate.
grelem::MatP mat_or_word(const json& j) {
  if (j.is_object() && j.contains("gens")) return grelem::io::word_from_json(j).eval();
  if (j.is_object() && j.contains("entries")) return grelem::io::matrix_from_json(j);
  grelem::fail(grelem::err::parse, "expected a word ('gens') or a matrix ('entries')");
}

int do_verify(const std::string& suite, const CommonOpts& o, unsigned dil, bool dil_set) {
  const grelem::Report r = grelem::run_suite(suite, suite_options(o, dil, dil_set));
  emit(grelem::io::to_json(r, !o.no_timing));
  return r.pass() ? 0 : 1;
}

int do_factor(const std::string& kind, const CommonOpts& o) {
  if (o.input.empty()) grelem::fail(grelem::err::parse, "factor needs --input");
  const json in = grelem::io::load_json_file(o.input);

  if (kind == "normalize") {
    const json& jw = in.contains("word") ? in.at("word") : in;
    emit(grelem::io::to_json(grelem::normalize_mod_plus(grelem::io::word_from_json(jw))));
    return 0;
  }
  if (kind == "rearrange") {
    if (!in.contains("pairs") || !in.at("pairs").is_array())
      grelem::fail(grelem::err::parse, "rearrange input needs a 'pairs' array");
    std::vector<std::pair<grelem::MatP, grelem::MatP>> pairs;
    for (const json& p : in.at("pairs"))
      pairs.emplace_back(mat_or_word(p.at("a")), mat_or_word(p.at("b")));
    emit(grelem::io::to_json(grelem::rearrange_product(pairs)));
    return 0;
  }
  if (kind == "transvection") {
    const grelem::GroupCase c = grelem::case_parse(in.at("case").get<std::string>());
    const grelem::CoeffRing ring = grelem::CoeffRing::parse(in.at("ring").get<std::string>());
    const unsigned nv = in.at("num_vars").get<unsigned>();
    grelem::VecP w;
    for (const json& e : in.at("w")) w.push_back(grelem::io::poly_from_json_or_text(e, ring, nv));
    if (in.contains("conjugator")) {
      const grelem::ElemWord eps = grelem::io::word_from_json(in.at("conjugator"));
      emit(grelem::io::to_json(grelem::transvection_word_conj(eps, w)));
      return 0;
    }
    const grelem::ElemWord tw = grelem::transvection_word(c, w);
    json out;
    out["word"] = grelem::io::to_json(tw);
    out["target"] = grelem::io::to_json(tw.eval());
    out["checked"] = true;
    emit(out);
    return 0;
  }
  if (kind == "commutator") {
    const grelem::ElemWord wa = grelem::io::word_from_json(in.at("alpha"));
    const grelem::ElemWord wb = grelem::io::word_from_json(in.at("beta"));
    const grelem::Scalar zero = grelem::Scalar::zero(wa.ring());
    emit(grelem::io::to_json(grelem::commutator_factor(
        wa.kase(), wa.eval(), wb.eval(), wa.plus_eval(zero), wb.plus_eval(zero))));
    return 0;
  }
  grelem::fail(grelem::err::parse,
               "unknown factor kind '" + kind + "' (normalize | rearrange | transvection | commutator)");
}

int do_patch(const CommonOpts& o, const std::string& kind, const std::vector<unsigned>& powers) {
  if (o.input.empty()) grelem::fail(grelem::err::parse, "patch needs --input");
  if (o.primes.empty()) grelem::fail(grelem::err::parse, "patch needs --primes");
  const json in = grelem::io::load_json_file(o.input);
  const grelem::MatP a = mat_or_word(in.contains("target") ? in.at("target") : in);

  std::vector<grelem::Scalar> sv;
  std::vector<unsigned> lv;
  for (std::size_t i = 0; i < o.primes.size(); ++i) {
    sv.push_back(grelem::Scalar::of(a.proto().ring(), long(o.primes[i])));
    lv.push_back(i < powers.size() ? powers[i] : 1);
  }
  const grelem::ComaximalData cd = grelem::comaximal_powers(sv, lv);

  if (kind == "telescoping") {
    emit(grelem::io::to_json(grelem::telescoping_patch(a, cd)));
    return 0;
  }
  if (kind == "commutator") {
    if (!in.contains("local") || !in.at("local").is_array() || in.at("local").size() != sv.size())
      grelem::fail(grelem::err::parse, "commutator patching needs one 'local' entry per prime");
    std::vector<grelem::LocalCommutatorDecomp> local;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      const json& ld = in.at("local")[i];
      grelem::LocalCommutatorDecomp d{{}, grelem::localize(mat_or_word(ld.at("eps")), sv[i])};
      for (const json& p : ld.at("pairs"))
        d.pairs.emplace_back(grelem::localize(mat_or_word(p.at("beta")), sv[i]),
                             grelem::localize(mat_or_word(p.at("gamma")), sv[i]));
      local.push_back(std::move(d));
    }
    emit(grelem::io::to_json(grelem::commutator_patch(a, cd, local)));
    return 0;
  }
  grelem::fail(grelem::err::parse, "unknown patch kind '" + kind + "' (telescoping | commutator)");
}

int do_complete(const CommonOpts& o) {
  if (o.input.empty()) grelem::fail(grelem::err::parse, "complete needs --input");
  const json in = grelem::io::load_json_file(o.input);

  grelem::CoeffRing ring = grelem::CoeffRing::rationals();
  if (!o.ring_str.empty())
    ring = grelem::CoeffRing::parse(o.ring_str);
  else if (in.contains("ring"))
    ring = grelem::CoeffRing::parse(in.at("ring").get<std::string>());
  const unsigned nv = in.contains("num_vars") ? in.at("num_vars").get<unsigned>() : o.vars;

  grelem::SemilocalInstance inst = grelem::SemilocalInstance::field(grelem::CoeffRing::rationals());
  if (ring.is_field() && o.primes.empty()) {
    inst = grelem::SemilocalInstance::field(ring);
  } else {
    if (o.primes.size() != 1)
      grelem::fail(grelem::err::parse, "a prime-local instance needs exactly one --primes value");
    if (!(ring == grelem::CoeffRing::rationals()))
      grelem::fail(grelem::err::parse, "the prime-local instance lives inside the rationals");
    inst = grelem::SemilocalInstance::z_local_at_prime(o.primes[0]);
  }

  grelem::VecP row;
  for (const json& e : in.at("row")) row.push_back(grelem::io::poly_from_json_or_text(e, ring, nv));
  const grelem::ElemWord eps = grelem::complete_unimodular(row, inst);
  json out;
  out["word"] = grelem::io::to_json(eps);
  out["checked"] = true;
  emit(out);
  return 0;
}

int do_eval(const CommonOpts& o, const std::string& matrix_literal, const std::string& at) {
  grelem::MatP m(1, grelem::GradedPoly(grelem::CoeffRing::integers(), 0));
  if (!matrix_literal.empty()) {
    const grelem::CoeffRing ring =
        o.ring_str.empty() ? grelem::CoeffRing::integers() : grelem::CoeffRing::parse(o.ring_str);
    m = grelem::parse_matrix_rows(matrix_literal, ring, o.vars);
  } else if (!o.input.empty()) {
    const json in = grelem::io::load_json_file(o.input);
    m = mat_or_word(in.contains("word") ? in.at("word")
                                        : (in.contains("matrix") ? in.at("matrix") : in));
  } else {
    grelem::fail(grelem::err::parse, "eval needs --input or --matrix");
  }
  if (!at.empty()) m = m.plus_eval(grelem::Scalar::from_string(m.proto().ring(), at));
  json out;
  out["matrix"] = grelem::io::to_json(m);
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact factorization witnesses for elementary matrix groups over graded rings"};
  app.require_subcommand(1);

  CommonOpts vo, fo, po, co, eo;
  std::string suite, factor_kind, patch_kind = "telescoping", matrix_literal, eval_at;
  unsigned dilation_exponent = 0;
  bool dilation_set = false;
  std::vector<unsigned> powers;

  CLI::App* verify = app.add_subcommand("verify", "run a property suite and report pass/fail");
  std::string suite_help = "suite:";
  for (const auto& name : grelem::suite_names()) suite_help += " " + name;
  verify->add_option("suite", suite, suite_help)->required();
  add_common(verify, vo);
  verify->add_option("--dilation-exponent", dilation_exponent, "force the dilation exponent")
      ->each([&](const std::string&) { dilation_set = true; });

  CLI::App* factor = app.add_subcommand("factor", "emit a factorization witness");
  factor->add_option("kind", factor_kind, "kind: normalize | rearrange | transvection | commutator")
      ->required();
  add_common(factor, fo);

  CLI::App* patch = app.add_subcommand("patch", "telescoping factorization over comaximal powers");
  add_common(patch, po);
  patch->add_option("--powers", powers, "exponents for the comaximal powers")->delimiter(',');
  patch->add_option("--kind", patch_kind, "telescoping | commutator")->capture_default_str();

  CLI::App* complete = app.add_subcommand("complete", "complete a unimodular row to e_1");
  add_common(complete, co);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a word or matrix, optionally at t");
  add_common(eval, eo);
  eval->add_option("--matrix", matrix_literal, "matrix literal: rows ';', entries ','");
  eval->add_option("--at", eval_at, "plus-evaluate at this scalar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return do_verify(suite, vo, dilation_exponent, dilation_set);
    if (factor->parsed()) return do_factor(factor_kind, fo);
    if (patch->parsed()) return do_patch(po, patch_kind, powers);
    if (complete->parsed()) return do_complete(co);
    if (eval->parsed()) return do_eval(eo, matrix_literal, eval_at);
  } catch (const grelem::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
