#include "grelem/words.hpp"

namespace grelem {

GenIndex canonical_gen_index(GroupCase c, unsigned n, unsigned i, unsigned j) {
  if (i < 1 || i > n || j < 1 || j > n) fail(err::structural, "generator index out of range");
  if (i == j) fail(err::structural, "generator needs i != j");
  if (c == GroupCase::linear) return {i, j, false};
  check_case_n(c, n);
  if (c == GroupCase::orthogonal && i == sigma(j, n))
    fail(err::structural, "orthogonal generators need i != sigma(j)");
  if (c == GroupCase::symplectic && i == sigma(j, n)) return {i, j, false};
  if (i < j) return {i, j, false};
  // Rewriting e_ij through the printed i < j identity lands on the index pair
  // (sigma(j), sigma(i)); the argument flips sign unless (symplectic only)
  // (-1)^{i+j} = -1 keeps it.
  const bool negate = (c == GroupCase::orthogonal) || ((i + j) % 2 == 0);
  return {sigma(j, n), sigma(i, n), negate};
}

ElemWord::ElemWord(GroupCase c, unsigned n, CoeffRing ring, unsigned num_vars)
    : case_(c), n_(n), ring_(ring), nvars_(num_vars) {
  check_case_n(c, n);
  if (c == GroupCase::orthogonal && ring.characteristic() == 2)
    fail(err::unsupported_ring, "orthogonal case is gated off over F_2");
}

void ElemWord::append(unsigned i, unsigned j, GradedPoly arg) {
  if (!(arg.ring() == ring_) || arg.num_vars() != nvars_)
    fail(err::ring_mismatch, "generator argument over the wrong ring");
  GenIndex g = canonical_gen_index(case_, n_, i, j);
  gens_.push_back(ElemGen{g.i, g.j, g.negate ? -arg : std::move(arg)});
}

MatP gen_matrix(GroupCase c, unsigned n, const ElemGen& g) {
  return gen_matrix_canonical<GradedPoly>(c, n, g.i, g.j, g.arg);
}

MatP ElemWord::eval() const {
  MatP acc = MatP::identity(n_, GradedPoly(ring_, nvars_));
  for (const ElemGen& g : gens_) acc = acc * gen_matrix(case_, n_, g);
  return acc;
}

ElemWord ElemWord::inverse() const {
  ElemWord r(case_, n_, ring_, nvars_);
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) r.append(it->i, it->j, -it->arg);
  return r;
}

ElemWord ElemWord::concat(const ElemWord& o) const {
  if (case_ != o.case_ || n_ != o.n_ || !(ring_ == o.ring_) || nvars_ != o.nvars_)
    fail(err::structural, "concatenating incompatible words");
  ElemWord r = *this;
  for (const ElemGen& g : o.gens_) r.gens_.push_back(g);
  return r;
}

ElemWord ElemWord::conjugated_by(const ElemWord& c) const {
  return c.concat(*this).concat(c.inverse());
}

ElemWord ElemWord::plus_eval(const Scalar& t) const {
  ElemWord r(case_, n_, ring_, nvars_);
  for (const ElemGen& g : gens_) {
    GradedPoly a = g.arg.plus_eval(t);
    if (!a.is_zero()) r.append(g.i, g.j, std::move(a));
  }
  return r;
}

ElemWord split_word(const ElemWord& w) {
  ElemWord r(w.kase(), w.n(), w.ring(), w.num_vars());
  for (const ElemGen& g : w.gens()) {
    const GradedPoly a0 = g.arg.homogeneous_component(0);
    r.append(g.i, g.j, a0);
    r.append(g.i, g.j, g.arg - a0);
  }
  return r;
}

Witness make_witness_checked(MatP target, std::vector<std::pair<std::string, MatP>> factors) {
  MatP prod = MatP::identity(target.size(), target.proto().zero_like());
  for (const auto& [label, f] : factors) prod = prod * f;
  internal_check(prod == target, "witness factors must multiply to the target");
  return Witness{std::move(target), std::move(factors), true};
}

Witness rearrange_product(const std::vector<std::pair<MatP, MatP>>& pairs) {
  if (pairs.empty()) fail(err::structural, "rearrange_product needs at least one pair");
  const MatP& first = pairs[0].first;
  MatP target = MatP::identity(first.size(), first.proto().zero_like());
  for (const auto& [a, b] : pairs) target = target * (a * b);

  std::vector<std::pair<std::string, MatP>> factors;
  MatP j_acc = MatP::identity(first.size(), first.proto().zero_like());
  MatP j_inv = j_acc;
  unsigned k = 0;
  for (const auto& [a, b] : pairs) {
    ++k;
    j_acc = j_acc * a;          // J_k = a_1 ... a_k
    j_inv = inverse(a) * j_inv;  // J_k^-1, NotInvertible surfaces here
    factors.emplace_back("J" + std::to_string(k) + " b" + std::to_string(k) + " J" +
                             std::to_string(k) + "^-1",
                         j_acc * b * j_inv);
  }
  k = 0;
  for (const auto& [a, b] : pairs) factors.emplace_back("a" + std::to_string(++k), a);
  return make_witness_checked(std::move(target), std::move(factors));
}

ConjugatedWord normalize_mod_plus(const ElemWord& w) {
  if (w.n() < case_min_n(w.kase()))
    fail(err::structural, "normalization needs n >= " + std::to_string(case_min_n(w.kase())) +
                              " for the " + case_name(w.kase()) + " case");
  const MatP target = w.eval();
  if (!is_level_plus(target))
    fail(err::not_level, "word does not evaluate into the level of the positive-degree ideal");

  ConjugatedWord out{w.kase(), w.n(), {}, ElemWord(w.kase(), w.n(), w.ring(), w.num_vars())};
  ElemWord eps(w.kase(), w.n(), w.ring(), w.num_vars());
  for (const ElemGen& g : w.gens()) {
    const GradedPoly a0 = g.arg.homogeneous_component(0);
    const GradedPoly aplus = g.arg - a0;
    if (!a0.is_zero()) eps.append(g.i, g.j, a0);
    if (!aplus.is_zero()) out.pairs.emplace_back(eps, ElemGen{g.i, g.j, aplus});
  }
  internal_check(eps.eval().is_identity(), "degree-0 residual word must collapse to I");
  out.residual = eps;

  MatP prod = MatP::identity(w.n(), GradedPoly(w.ring(), w.num_vars()));
  for (const auto& [conj, core] : out.pairs) {
    const MatP e = conj.eval();
    prod = prod * e * gen_matrix(w.kase(), w.n(), core) * conj.inverse().eval();
  }
  internal_check(prod == target, "conjugated cores must reproduce the word");
  return out;
}

ElemWord transvection_word(GroupCase c, const VecP& w) {
  const unsigned n = unsigned(w.size());
  if (n < case_min_n(c))
    fail(err::structural, "transvections need n >= " + std::to_string(case_min_n(c)) + " for the " +
                              case_name(c) + " case");
  const CoeffRing ring = w[0].ring();
  const unsigned nv = w[0].num_vars();
  const VecP e1 = unit_vector(ring, nv, n, 1);
  if (!inner_product(c, e1, w).is_zero())
    fail(err::orthogonality, "<e1, w> must vanish for a transvection at e1");

  ElemWord word(c, n, ring, nv);
  if (c == GroupCase::linear) {
    for (unsigned j = 2; j <= n; ++j)
      if (!w[j - 1].is_zero()) word.append(1, j, w[j - 1]);
  } else {
    // Per index pair (o, e) = (2b-1, 2b) the two generators reproduce the row
    // and column of I + M(e_1, w); their cross terms pile up in the (1,2)
    // corner, which the long-root generator absorbs (symplectic) or isotropy
    // cancels (orthogonal).
    GradedPoly corner = w[0].zero_like();
    for (unsigned b = 2; 2 * b <= n; ++b) {
      const unsigned o = 2 * b - 1, e = 2 * b;
      corner += w[o - 1] * w[e - 1];
      if (c == GroupCase::symplectic) {
        if (!w[e - 1].is_zero()) word.append(1, o, -w[e - 1]);
        if (!w[o - 1].is_zero()) word.append(1, e, w[o - 1]);
      } else {
        if (!w[e - 1].is_zero()) word.append(1, o, w[e - 1]);
        if (!w[o - 1].is_zero()) word.append(1, e, w[o - 1]);
      }
    }
    if (c == GroupCase::symplectic) {
      GradedPoly c12 = w[0] + w[0] + corner;
      if (!c12.is_zero()) word.append(1, 2, std::move(c12));
    } else if (!corner.is_zero()) {
      fail(err::orthogonality, "orthogonal transvections need an isotropic w");
    }
  }
  internal_check(word.eval() == MatP::identity(n, GradedPoly(ring, nv)) + m_of(c, e1, w),
                 "transvection word must evaluate to I + M(e1, w)");
  return word;
}

Witness transvection_word_conj(const ElemWord& eps, const VecP& w) {
  const GroupCase c = eps.kase();
  const unsigned n = eps.n();
  if (w.size() != n) fail(err::structural, "w length must match the word size");
  const MatP e = eps.eval();
  const MatP e_inv = eps.inverse().eval();
  VecP v(n, w[0].zero_like());
  for (unsigned i = 0; i < n; ++i) v[i] = e.at(i, 0);  // v = eval(eps) e_1
  if (!inner_product(c, v, w).is_zero())
    fail(err::orthogonality, "<v, w> must vanish for a transvection at v");

  // Transport: conjugation moves M(e_1, w') to M(v, w) when w' is w pulled
  // through eps (transpose for the linear pairing, inverse for form cases).
  VecP wp(n, w[0].zero_like());
  for (unsigned i = 0; i < n; ++i) {
    GradedPoly acc = w[0].zero_like();
    for (unsigned j = 0; j < n; ++j)
      acc += (c == GroupCase::linear ? e.at(j, i) : e_inv.at(i, j)) * w[j];
    wp[i] = acc;
  }
  const ElemWord tw = transvection_word(c, wp);
  MatP target = MatP::identity(n, w[0].zero_like()) + m_of(c, v, w);
  return make_witness_checked(std::move(target), {{"eps", e},
                                                  {"I + M(e1, w')", tw.eval()},
                                                  {"eps^-1", e_inv}});
}

Witness commutator_factor(GroupCase c, const MatP& alpha, const MatP& beta,
                          const ElemWord& alpha0_word, const ElemWord& beta0_word) {
  alpha.check_same_shape(beta);
  if (!is_in_S(c, alpha) || !is_in_S(c, beta))
    fail(err::precondition, "commutator inputs must lie in S(n, A)");
  const MatP a0 = alpha.plus_eval(Scalar::zero(alpha.proto().ring()));
  const MatP b0 = beta.plus_eval(Scalar::zero(beta.proto().ring()));
  if (!(alpha0_word.eval() == a0) || !(beta0_word.eval() == b0))
    fail(err::precondition, "supplied words must evaluate to the degree-0 parts");

  const MatP a = alpha * inverse(a0);
  const MatP b = beta * inverse(b0);
  const MatP ai = inverse(a), bi = inverse(b);
  const MatP bab = b * a * bi;
  const MatP ba = b * a;
  std::vector<std::pair<std::string, MatP>> factors;
  factors.emplace_back("a b a^-1 b^-1", a * b * ai * bi);
  factors.emplace_back("(b a b^-1) alpha0 (b a b^-1)^-1", bab * a0 * inverse(bab));
  factors.emplace_back("(b a) beta0 alpha0^-1 (b a)^-1", ba * b0 * inverse(a0) * inverse(ba));
  factors.emplace_back("b beta0^-1 b^-1", b * inverse(b0) * bi);
  MatP target = alpha * beta * inverse(alpha) * inverse(beta);
  return make_witness_checked(std::move(target), std::move(factors));
}

Witness commutator_normal_form(GroupCase c, const std::vector<std::pair<MatP, MatP>>& comms,
                               const ElemWord& eps) {
  if (comms.empty()) fail(err::structural, "normal form needs at least one commutator pair");
  const Scalar zero = Scalar::zero(comms[0].first.proto().ring());
  MatP target = eps.eval();
  for (auto it = comms.rbegin(); it != comms.rend(); ++it) {
    const auto& [a, b] = *it;
    if (!is_in_S(c, a) || !is_in_S(c, b))
      fail(err::precondition, "commutator inputs must lie in S(n, A)");
    target = a * b * inverse(a) * inverse(b) * target;
  }
  if (!is_level_plus(target))
    fail(err::not_level, "assembled product must lie in the level of the positive-degree ideal");

  std::vector<std::pair<std::string, MatP>> factors;
  MatP lead = MatP::identity(target.size(), target.proto().zero_like());
  unsigned k = 0;
  for (const auto& [a, b] : comms) {
    ++k;
    const MatP beta = a * inverse(a.plus_eval(zero));
    const MatP gamma = b * inverse(b.plus_eval(zero));
    internal_check(beta.plus_eval(zero).is_identity() && gamma.plus_eval(zero).is_identity(),
                   "stripped factors must be level");
    MatP comm = beta * gamma * inverse(beta) * inverse(gamma);
    lead = lead * comm;
    factors.emplace_back("[beta" + std::to_string(k) + ", gamma" + std::to_string(k) + "]",
                         std::move(comm));
  }
  MatP residual = inverse(lead) * target;
  internal_check(residual.plus_eval(zero).is_identity(), "normal-form residual must be level");
  factors.emplace_back("residual", std::move(residual));
  return make_witness_checked(std::move(target), std::move(factors));
}

}  // namespace grelem
