#include "grelem/suites.hpp"

#include <chrono>
#include <functional>

#include "grelem/sample.hpp"

namespace grelem {

namespace {

using TrialFn = std::function<std::optional<Failure>(Sampler&, unsigned)>;

Report run_trials(std::string name, std::string params, const SuiteOptions& opt,
                  unsigned default_trials, const TrialFn& trial) {
  Report r;
  r.suite = std::move(name);
  r.params = std::move(params);
  r.seed = opt.seed;
  r.trials = opt.trials.value_or(default_trials);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::optional<Failure>> slot(r.trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < long(r.trials); ++i) {
    Sampler s(splitmix64(opt.seed) ^ splitmix64(std::uint64_t(i) + 1));
    try {
      slot[std::size_t(i)] = trial(s, unsigned(i));
    } catch (const std::exception& e) {
      slot[std::size_t(i)] = Failure{"trial " + std::to_string(i), "no exception", e.what()};
    }
  }
  for (auto& f : slot)
    if (f) r.failures.push_back(std::move(*f));
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<GroupCase> case_mix(const SuiteOptions& opt) {
  if (opt.kase) return {*opt.kase};
  return {GroupCase::linear, GroupCase::symplectic, GroupCase::orthogonal};
}

CoeffRing ring_of(const SuiteOptions& opt) { return opt.ring.value_or(CoeffRing::integers()); }

std::string describe(const SuiteOptions& opt, const std::vector<GroupCase>& cases) {
  std::string d = "cases=";
  for (std::size_t i = 0; i < cases.size(); ++i) d += (i ? "," : "") + case_name(cases[i]);
  d += " ring=" + ring_of(opt).name() + " vars=" + std::to_string(opt.num_vars);
  if (opt.n) d += " n=" + std::to_string(*opt.n);
  return d;
}

unsigned pick_n(Sampler& s, const SuiteOptions& opt, GroupCase c, unsigned linear_lo,
                unsigned linear_hi, std::initializer_list<unsigned> paired) {
  if (opt.n) return *opt.n;
  if (c == GroupCase::linear) return unsigned(s.range(long(linear_lo), long(linear_hi)));
  std::vector<unsigned> p(paired);
  return p[std::size_t(s.range(0, long(p.size()) - 1))];
}

MatP rand_mat(Sampler& s, const CoeffRing& ring, unsigned nv, unsigned n) {
  MatP m(n, GradedPoly(ring, nv));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m.at(i, j) = s.poly(ring, nv, 2, 3);
  return m;
}

VecP mat_times_col(const MatP& a, const VecP& v) {
  internal_check(v.size() == a.size(), "column length must match the matrix");
  VecP r(a.size(), a.proto().zero_like());
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned k = 0; k < a.size(); ++k) r[i] = r[i] + a.at(i, k) * v[k];
  return r;
}

std::string vec_to_string(const VecP& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

// --- splitting: ge(x+y) = ge(x) ge(y) -------------------------------------

Report suite_splitting(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("splitting", describe(opt, cases), opt, 200,
                    [=](Sampler& s, unsigned) -> std::optional<Failure> {
    const GroupCase c = cases[std::size_t(s.range(0, long(cases.size()) - 1))];
    const unsigned n = pick_n(s, opt, c, 3, 5, {6, 8});
    auto [i, j] = s.gen_index(c, n);
    const GradedPoly x = s.poly(ring, nv), y = s.poly(ring, nv);
    ElemWord sum(c, n, ring, nv), parts(c, n, ring, nv);
    sum.append(i, j, x + y);
    parts.append(i, j, x);
    parts.append(i, j, y);
    if (sum.eval() == parts.eval()) return std::nullopt;
    return Failure{case_name(c) + " n=" + std::to_string(n) + " (i,j)=(" + std::to_string(i) +
                       "," + std::to_string(j) + ") x=" + x.to_string() + " y=" + y.to_string(),
                   "ge(x+y) = ge(x) ge(y)", "products differ"};
  });
}

// --- swan-weibel: homotopy evaluation laws ---------------------------------

Report suite_swan_weibel(const SuiteOptions& opt) {
  std::vector<CoeffRing> rings;
  if (opt.ring)
    rings = {*opt.ring};
  else
    rings = {CoeffRing::integers(), CoeffRing::rationals(), CoeffRing::prime_field(5)};
  const unsigned nv = opt.num_vars;
  std::string params = "rings=";
  for (std::size_t i = 0; i < rings.size(); ++i) params += (i ? "," : "") + rings[i].name();
  return run_trials("swan-weibel", params, opt, unsigned(100 * rings.size()),
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const CoeffRing ring = rings[idx % rings.size()];
    const GradedPoly a = s.poly(ring, nv), b = s.poly(ring, nv);
    const Scalar u = s.scalar(ring), t = s.scalar(ring);
    const std::string at = "ring=" + ring.name() + " b=" + b.to_string() +
                           " s=" + u.to_string() + " t=" + t.to_string();
    if (!(b.plus_eval(u).plus_eval(t) == b.plus_eval(u * t)))
      return Failure{at, "(b^+(s))^+(t) = b^+(st)", "iterated evaluation differs"};
    if (!(b.plus_eval(Scalar::zero(ring)) == b.homogeneous_component(0)))
      return Failure{at, "b^+(0) = b_0", "degree-0 component differs"};
    if (!((a + b).plus_eval(t) == a.plus_eval(t) + b.plus_eval(t)))
      return Failure{at, "(a+b)^+(t) = a^+(t) + b^+(t)", "additivity fails"};
    if (!((a * b).plus_eval(t) == a.plus_eval(t) * b.plus_eval(t)))
      return Failure{at, "(ab)^+(t) = a^+(t) b^+(t)", "multiplicativity fails"};
    const MatP A = rand_mat(s, ring, nv, 4), B = rand_mat(s, ring, nv, 4);
    if (!((A * B).plus_eval(t) == A.plus_eval(t) * B.plus_eval(t)))
      return Failure{at, "(AB)^+(t) = A^+(t) B^+(t)", "matrix multiplicativity fails"};
    return std::nullopt;
  });
}

// --- forms: transpose identities and generator membership ------------------

Report suite_forms(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("forms", describe(opt, cases), opt, 108,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    if (idx < 8) {
      const unsigned m = idx / 2 + 1;
      const FormKind kind = (idx % 2 == 0) ? FormKind::psi : FormKind::psi_tilde;
      const FormMatrix f = form(m, kind, ring, nv);
      const bool ok = (kind == FormKind::psi) ? (f.mat.transpose() == -f.mat)
                                              : (f.mat.transpose() == f.mat);
      if (ok) return std::nullopt;
      return Failure{std::string(kind == FormKind::psi ? "psi" : "psi~") + " m=" +
                         std::to_string(m),
                     kind == FormKind::psi ? "psi^T = -psi" : "psi~^T = psi~",
                     "transpose identity fails"};
    }
    const GroupCase c = cases[std::size_t(s.range(0, long(cases.size()) - 1))];
    const unsigned n = pick_n(s, opt, c, 3, 5, {4, 6, 8});
    auto [i, j] = s.gen_index(c, n);
    const GradedPoly z = s.poly(ring, nv);
    const MatP g = gen_matrix_any<GradedPoly>(c, n, i, j, z);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " ge_(" +
                           std::to_string(i) + "," + std::to_string(j) + ")(" + z.to_string() +
                           ")";
    if (!is_in_G(c, g)) return Failure{at, "generator preserves the case group", "is_in_G fails"};
    if (!(det(g) == GradedPoly::constant(ring, nv, 1)))
      return Failure{at, "det = 1", det(g).to_string()};
    return std::nullopt;
  });
}

// --- normalization: degree-0 parts pushed into conjugators -----------------

Report suite_normalization(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("normalization", describe(opt, cases), opt, unsigned(50 * cases.size()),
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n = opt.n.value_or(case_min_n(c));
    const ElemWord w = s.level_word(c, n, ring, nv, unsigned(s.range(1, 4)));
    const ConjugatedWord cw = normalize_mod_plus(w);
    const MatP target = w.eval();
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " len=" +
                           std::to_string(w.gens().size());
    MatP prod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& [conj, core] : cw.pairs) {
      if (!core.arg.homogeneous_component(0).is_zero())
        return Failure{at, "core arguments lie in the positive-degree ideal",
                       core.arg.to_string()};
      prod = prod * conj.eval() * gen_matrix(c, n, core) * conj.inverse().eval();
    }
    if (!cw.residual.eval().is_identity())
      return Failure{at, "residual evaluates to I", "nontrivial residual"};
    prod = prod * cw.residual.eval();
    if (!(prod == target)) return Failure{at, "conjugated word re-evaluates to the input", "differs"};
    return std::nullopt;
  });
}

// --- rearrangement: prod a_i b_i = (prod J_i b_i J_i^-1)(prod a_i) ----------

Report suite_rearrangement(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("rearrangement", describe(opt, cases), opt, 100,
                    [=](Sampler& s, unsigned) -> std::optional<Failure> {
    const GroupCase c = cases[std::size_t(s.range(0, long(cases.size()) - 1))];
    // Orthogonal n=2 has no generators (every off-diagonal slot has i = sigma(j)).
    const unsigned n = (c == GroupCase::orthogonal) ? pick_n(s, opt, c, 2, 6, {4, 6})
                                                    : pick_n(s, opt, c, 2, 6, {2, 4, 6});
    const unsigned r = unsigned(s.range(1, 4));
    std::vector<std::pair<MatP, MatP>> pairs;
    MatP expected = MatP::identity(n, GradedPoly(ring, nv));
    for (unsigned k = 0; k < r; ++k) {
      // Short words with small arguments: the witness inverts each a_k and
      // multiplies up to 2r+1 matrices, so entry growth is the cost driver.
      MatP a = s.invertible(c, n, ring, nv, unsigned(s.range(1, 2)), 2, 3);
      MatP b = s.invertible(c, n, ring, nv, unsigned(s.range(1, 2)), 2, 3);
      expected = expected * a * b;
      pairs.emplace_back(std::move(a), std::move(b));
    }
    const Witness w = rearrange_product(pairs);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    if (!w.checked) return Failure{at, "checked witness", "unchecked"};
    if (!(w.target == expected)) return Failure{at, "target = prod a_i b_i", "target differs"};
    MatP prod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& [label, f] : w.factors) prod = prod * f;
    if (!(prod == expected)) return Failure{at, "factors multiply to prod a_i b_i", "differs"};
    return std::nullopt;
  });
}

// --- dilation: minimal exponent and pullback round trip --------------------

Report suite_dilation(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  const std::vector<std::uint64_t> primes = opt.primes;
  return run_trials("dilation", describe(opt, cases), opt, 50,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n = opt.n.value_or(case_min_n(c));
    const Scalar sp = Scalar::of(ring, long(primes[idx % primes.size()]));
    const unsigned len = unsigned(s.range(2, 6));
    MatL a = MatL::identity(n, localize(GradedPoly(ring, nv), sp));
    for (unsigned t = 0; t < len; ++t) {
      auto [i, j] = s.gen_index(c, n);
      const LocalizedPoly arg(s.positive_poly(ring, nv), unsigned(s.range(0, 3)), sp);
      a = a * gen_matrix_any<LocalizedPoly>(c, n, i, j, arg);
    }
    const unsigned l = dilation_exponent(a);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " s=" + sp.to_string() +
                           " l=" + std::to_string(l);

    if (opt.dilation_exponent && *opt.dilation_exponent != l) {
      // Forced exponent: must clear iff it is at least the minimal one.
      const unsigned forced = *opt.dilation_exponent;
      bool cleared = true;
      try {
        dilate_pullback(a, forced);
      } catch (const Error& e) {
        if (e.kind() != err::denominator) throw;
        cleared = false;
      }
      if (cleared != (forced >= l))
        return Failure{at + " forced=" + std::to_string(forced),
                       forced >= l ? "pullback clears" : "DenominatorNotCleared",
                       cleared ? "cleared" : "did not clear"};
      if (!cleared) return std::nullopt;
      // fall through and re-check with the honored forced exponent
      const MatP pulled = dilate_pullback(a, forced);
      if (!(localize(pulled, sp) == a.plus_eval(sp.pow(forced))))
        return Failure{at, "localize(pullback) = a^+(s^l)", "round trip differs"};
      return std::nullopt;
    }

    const MatP pulled = dilate_pullback(a, l);
    if (!(localize(pulled, sp) == a.plus_eval(sp.pow(l))))
      return Failure{at, "localize(pullback) = a^+(s^l)", "round trip differs"};
    if (!is_in_G(c, pulled))
      return Failure{at, "pullback stays in the case group", "is_in_G fails"};
    if (l > 0) {
      bool threw = false;
      try {
        dilate_pullback(a, l - 1);
      } catch (const Error& e) {
        threw = (e.kind() == err::denominator);
      }
      if (!threw)
        return Failure{at, "l is minimal: l-1 leaves a denominator", "l-1 cleared"};
    }
    return std::nullopt;
  });
}

// --- patch: telescoping factorization over comaximal powers -----------------

Report suite_patch(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  const std::vector<std::uint64_t> primes = opt.primes;
  return run_trials("patch", describe(opt, cases), opt, 30,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n = opt.n.value_or(case_min_n(c));
    std::size_t r = 2 + idx % 2;
    r = std::min(r, primes.size());
    std::vector<Scalar> sv;
    std::vector<unsigned> lv;
    for (std::size_t k = 0; k < r; ++k) {
      sv.push_back(Scalar::of(ring, long(primes[k])));
      lv.push_back(unsigned(s.range(1, 2)));
    }
    const ComaximalData cd = comaximal_powers(sv, lv);
    const MatP a = s.level_word(c, n, ring, nv, unsigned(s.range(1, 3))).eval();
    const PatchWitness pw = telescoping_patch(a, cd);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " r=" + std::to_string(r);
    if (!pw.checked) return Failure{at, "checked witness", "unchecked"};
    MatP prod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& f : pw.factors) prod = prod * f.m;
    if (!(prod == a)) return Failure{at, "prod F_i = a", "product differs"};
    for (std::size_t i = 0; i < pw.factors.size(); ++i) {
      const auto& f = pw.factors[i];
      if (!f.cert || !f.cert->checked || f.cert->kind != "dilation")
        return Failure{at, "every factor carries a checked dilation certificate", "missing"};
      const MatL as = localize(a, cd.s[i]);
      const MatL want = as.plus_eval(pw.partials[i]) * inverse(as.plus_eval(pw.partials[i + 1]));
      if (!(localize(f.m, cd.s[i]) == want))
        return Failure{at, "F_i re-localizes onto a^+(B_i) a^+(B_{i+1})^-1", "differs"};
    }
    return std::nullopt;
  });
}

// --- transvection: explicit words for I + M(e1, w) and conjugates ----------

Report suite_transvection(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("transvection", describe(opt, cases), opt, 100,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n =
        opt.n ? *opt.n : (c == GroupCase::linear ? unsigned(s.range(3, 5)) : 6u);
    const VecP w = s.transvection_vector(c, n, ring, nv);
    const VecP e1 = unit_vector(ring, nv, n, 1);
    const MatP oracle =
        MatP::identity(n, GradedPoly(ring, nv)) + m_of(c, e1, w);  // direct expansion
    const ElemWord tw = transvection_word(c, w);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " w=" + vec_to_string(w);
    if (!(tw.eval() == oracle))
      return Failure{at, "word evaluates to I + M(e1, w)", "evaluation differs"};

    // Conjugated variant: admissible data for v = eps e1 derived from w.
    ElemWord eps(c, n, ring, nv);
    auto [gi, gj] = s.gen_index(c, n);
    eps.append(gi, gj, s.poly(ring, nv, 2, 2));
    const MatP em = eps.eval();
    VecP wv;
    if (c == GroupCase::linear)
      wv = mat_times_col(inverse(em).transpose(), w);  // w' = eps^T wv recovers w
    else
      wv = mat_times_col(em, w);  // w' = eps^-1 wv recovers w
    const Witness wit = transvection_word_conj(eps, wv);
    if (!wit.checked) return Failure{at, "checked witness", "unchecked"};
    VecP v = mat_times_col(em, e1);
    const MatP conj_oracle = MatP::identity(n, GradedPoly(ring, nv)) + m_of(c, v, wv);
    if (!(wit.target == conj_oracle))
      return Failure{at, "target = I + M(eps e1, w)", "target differs"};
    MatP prod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& [label, f] : wit.factors) prod = prod * f;
    if (!(prod == conj_oracle))
      return Failure{at, "factors multiply to I + M(eps e1, w)", "differs"};
    return std::nullopt;
  });
}

// --- commutator: four-factor identity, normal form, local patching ---------

Report suite_commutator(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const unsigned nv = opt.num_vars;
  std::vector<GroupCase> cases =
      opt.kase ? std::vector<GroupCase>{*opt.kase}
               : std::vector<GroupCase>{GroupCase::linear, GroupCase::symplectic};
  return run_trials("commutator", describe(opt, cases), opt, 30,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n = opt.n.value_or(c == GroupCase::linear ? 3u : 6u);
    const std::string at = case_name(c) + " n=" + std::to_string(n);

    // Four-factor rewriting of one commutator.
    const ElemWord wa = s.word(c, n, ring, nv, unsigned(s.range(1, 2)));
    const ElemWord wb = s.word(c, n, ring, nv, unsigned(s.range(1, 2)));
    const MatP alpha = wa.eval(), beta = wb.eval();
    const Witness four = commutator_factor(c, alpha, beta, wa.plus_eval(Scalar::zero(ring)),
                                           wb.plus_eval(Scalar::zero(ring)));
    const MatP comm = alpha * beta * inverse(alpha) * inverse(beta);
    if (!four.checked || !(four.target == comm))
      return Failure{at, "four-factor witness targets [alpha, beta]", "target differs"};
    MatP prod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& [label, f] : four.factors) prod = prod * f;
    if (!(prod == comm)) return Failure{at, "four factors multiply to [alpha, beta]", "differs"};

    // Normal form of a commutator product with level residual.
    std::vector<std::pair<MatP, MatP>> comms;
    MatP target = MatP::identity(n, GradedPoly(ring, nv));
    const unsigned r2 = unsigned(s.range(1, 2));
    for (unsigned k = 0; k < r2; ++k) {
      const MatP ak = s.word(c, n, ring, nv, unsigned(s.range(1, 2))).eval();
      const MatP bk = s.level_word(c, n, ring, nv, 1).eval();
      target = target * ak * bk * inverse(ak) * inverse(bk);
      comms.emplace_back(ak, bk);
    }
    const ElemWord epsw = s.level_word(c, n, ring, nv, 1);
    target = target * epsw.eval();
    const Witness nf = commutator_normal_form(c, comms, epsw);
    if (!nf.checked || !(nf.target == target))
      return Failure{at, "normal form targets the commutator product", "target differs"};
    MatP nprod = MatP::identity(n, GradedPoly(ring, nv));
    for (std::size_t k = 0; k < nf.factors.size(); ++k) {
      const auto& [label, f] = nf.factors[k];
      if (!is_level_plus(f))
        return Failure{at, "every normal-form factor has f^+(0) = I", label};
      nprod = nprod * f;
    }
    if (!(nprod == target))
      return Failure{at, "normal-form factors multiply to the target", "differs"};

    // End-to-end: commutator decompositions drive the patch factors.
    const ElemWord bw = s.level_word(c, n, ring, nv, 1);
    const ElemWord gw = s.level_word(c, n, ring, nv, 1);
    const ElemWord ew = s.level_word(c, n, ring, nv, 1);
    const MatP bm = bw.eval(), gm = gw.eval();
    const MatP a = bm * gm * inverse(bm) * inverse(gm) * ew.eval();
    std::vector<Scalar> sv = {Scalar::of(ring, 2), Scalar::of(ring, 3)};
    const ComaximalData cd = comaximal_powers(sv, {1, 1});
    std::vector<LocalCommutatorDecomp> local;
    for (const Scalar& sp : sv) {
      LocalCommutatorDecomp d{{{localize(bm, sp), localize(gm, sp)}}, localize(ew.eval(), sp)};
      local.push_back(std::move(d));
    }
    const PatchWitness pw = commutator_patch(a, cd, local);
    if (!pw.checked) return Failure{at, "checked patch witness", "unchecked"};
    MatP pprod = MatP::identity(n, GradedPoly(ring, nv));
    for (const auto& f : pw.factors) {
      if (!f.cert || !f.cert->checked || f.cert->kind != "commutator-expansion")
        return Failure{at, "factors carry commutator-expansion certificates", "missing"};
      pprod = pprod * f.m;
    }
    if (!(pprod == a)) return Failure{at, "patch factors multiply to the target", "differs"};
    return std::nullopt;
  });
}

// --- unimodular: exhaustive completion over small prime fields -------------

struct UnimodularSpace {
  std::uint64_t p;
  unsigned n;
  unsigned count;  // p^n vectors
};

const std::vector<UnimodularSpace>& unimodular_spaces() {
  static const std::vector<UnimodularSpace> spaces = {
      {3, 2, 9}, {3, 3, 27}, {5, 2, 25}, {5, 3, 125}};
  return spaces;
}

Report suite_unimodular(const SuiteOptions& opt) {
  unsigned total = 0;
  for (const auto& sp : unimodular_spaces()) total += sp.count;
  return run_trials("unimodular", "exhaustive F_3^n, F_5^n for n=2,3", opt, total,
                    [=](Sampler&, unsigned idx) -> std::optional<Failure> {
    unsigned rest = idx;
    const UnimodularSpace* space = nullptr;
    for (const auto& sp : unimodular_spaces()) {
      if (rest < sp.count) {
        space = &sp;
        break;
      }
      rest -= sp.count;
    }
    if (!space) return std::nullopt;  // trials overridden beyond the enumeration

    const CoeffRing ring = CoeffRing::prime_field(space->p);
    const unsigned nv = opt.num_vars;
    std::vector<long> digits(space->n);
    {
      unsigned v = rest;
      for (unsigned k = 0; k < space->n; ++k) {
        digits[k] = long(v % space->p);
        v /= unsigned(space->p);
      }
    }
    VecP row;
    bool all_zero = true;
    for (long d : digits) {
      row.push_back(GradedPoly::constant(ring, nv, d));
      all_zero = all_zero && d == 0;
    }
    const std::string at = "F_" + std::to_string(space->p) + " v=" + vec_to_string(row);
    const SemilocalInstance inst = SemilocalInstance::field(ring);

    if (all_zero) {
      try {
        complete_unimodular(row, inst);
      } catch (const Error& e) {
        if (e.kind() == err::not_unimodular) return std::nullopt;
        throw;
      }
      return Failure{at, "NotUnimodular", "completion produced a word"};
    }

    const ElemWord eps = complete_unimodular(row, inst);
    if (!(row_times_mat(row, eps.eval()) == unit_vector(ring, nv, space->n, 1)))
      return Failure{at, "v eps = e_1", "row moved elsewhere"};

    // Independent elimination oracle: replay the recorded column operations
    // in plain machine arithmetic mod p.
    std::vector<long> r = digits;
    const long p = long(space->p);
    for (const ElemGen& g : eps.gens()) {
      const long cval = g.arg.constant_term().value().get_num().get_si();
      r[g.j - 1] = ((r[g.j - 1] + r[g.i - 1] * cval) % p + p) % p;
    }
    bool ok = r[0] == 1;
    for (unsigned k = 1; k < space->n; ++k) ok = ok && r[k] == 0;
    if (!ok) return Failure{at, "elimination oracle confirms e_1", "oracle disagrees"};
    return std::nullopt;
  });
}

// --- determinant: det(a^+(t)) = 1 along the homotopy ------------------------

Report suite_determinant(const SuiteOptions& opt) {
  const CoeffRing ring = ring_of(opt);
  const auto cases = case_mix(opt);
  const unsigned nv = opt.num_vars;
  return run_trials("determinant", describe(opt, cases), opt, 100,
                    [=](Sampler& s, unsigned idx) -> std::optional<Failure> {
    const GroupCase c = cases[idx % cases.size()];
    const unsigned n = pick_n(s, opt, c, 3, 5, {6, 8});
    const ElemWord w = s.word(c, n, ring, nv, unsigned(s.range(1, 5)));
    const MatP a = w.eval();
    const GradedPoly one = GradedPoly::constant(ring, nv, 1);
    const std::string at = case_name(c) + " n=" + std::to_string(n) + " len=" +
                           std::to_string(w.gens().size());
    for (long t : {0L, 1L, 2L, -1L}) {
      if (!(det(a.plus_eval(Scalar::of(ring, t))) == one))
        return Failure{at, "det(a^+(" + std::to_string(t) + ")) = 1", "determinant moved"};
    }
    return std::nullopt;
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "splitting",   "swan-weibel",   "forms",    "normalization",
      "rearrangement", "dilation",    "patch",    "transvection",
      "commutator",  "unimodular",    "determinant"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "splitting") return suite_splitting(opt);
  if (name == "swan-weibel") return suite_swan_weibel(opt);
  if (name == "forms") return suite_forms(opt);
  if (name == "normalization") return suite_normalization(opt);
  if (name == "rearrangement") return suite_rearrangement(opt);
  if (name == "dilation") return suite_dilation(opt);
  if (name == "patch") return suite_patch(opt);
  if (name == "transvection") return suite_transvection(opt);
  if (name == "commutator") return suite_commutator(opt);
  if (name == "unimodular") return suite_unimodular(opt);
  if (name == "determinant") return suite_determinant(opt);
  fail(err::parse, "unknown suite '" + name + "'");
}

}  // namespace grelem
