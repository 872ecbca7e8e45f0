#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grelem/matrix.hpp"

namespace grelem {

// One elementary generator, stored in canonical index form:
//   linear      E_ij(z)  = I + z e_ij, any i != j
//   symplectic  se_ij(z) = I + z e_ij                               if i = sigma(j)
//               se_ij(z) = I + z e_ij - (-1)^{i+j} z e_{sigma(j) sigma(i)}, i < j otherwise
//   orthogonal  oe_ij(z) = I + z e_ij - z e_{sigma(j) sigma(i)},    i != sigma(j), i < j
// Constructors accept i > j in the paired cases and rewrite to the canonical
// (sigma(j), sigma(i)) generator with the argument sign the identity forces.
struct ElemGen {
  unsigned i = 0, j = 0;  // 1-based
  GradedPoly arg;
};

struct GenIndex {
  unsigned i, j;
  bool negate;
};

// Validates (i, j) for the case and size; returns the canonical index pair and
// whether the printed identity flips the argument sign.
GenIndex canonical_gen_index(GroupCase c, unsigned n, unsigned i, unsigned j);

// The generator matrix over any entry type supporting ring ops (polynomials
// or localized polynomials). Indices must already be canonical.
template <class R>
Mat<R> gen_matrix_canonical(GroupCase c, unsigned n, unsigned i, unsigned j, const R& z) {
  Mat<R> m = Mat<R>::identity(n, z.zero_like());
  m.at(i - 1, j - 1) = m.at(i - 1, j - 1) + z;
  if (c == GroupCase::linear || (c == GroupCase::symplectic && i == sigma(j, n))) return m;
  const unsigned si = sigma(i, n), sj = sigma(j, n);
  if (c == GroupCase::symplectic) {
    R corr = ((i + j) % 2 == 0) ? -z : z;  // -(-1)^{i+j} z
    m.at(sj - 1, si - 1) = m.at(sj - 1, si - 1) + corr;
  } else {
    m.at(sj - 1, si - 1) = m.at(sj - 1, si - 1) - z;
  }
  return m;
}

template <class R>
Mat<R> gen_matrix_any(GroupCase c, unsigned n, unsigned i, unsigned j, const R& z) {
  GenIndex g = canonical_gen_index(c, n, i, j);
  return gen_matrix_canonical<R>(c, n, g.i, g.j, g.negate ? -z : z);
}

// Word of elementary generators for one case and size. Appending
// canonicalizes and validates; evaluation multiplies left to right.
class ElemWord {
public:
  ElemWord(GroupCase c, unsigned n, CoeffRing ring, unsigned num_vars);

  void append(unsigned i, unsigned j, GradedPoly arg);

  GroupCase kase() const { return case_; }
  unsigned n() const { return n_; }
  const CoeffRing& ring() const { return ring_; }
  unsigned num_vars() const { return nvars_; }
  const std::vector<ElemGen>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  MatP eval() const;
  ElemWord inverse() const;        // reversed generators with negated arguments
  ElemWord concat(const ElemWord& o) const;
  ElemWord conjugated_by(const ElemWord& c) const;  // c ++ *this ++ c^-1
  ElemWord plus_eval(const Scalar& t) const;        // argument-wise b^+(t)

private:
  GroupCase case_;
  unsigned n_;
  CoeffRing ring_;
  unsigned nvars_;
  std::vector<ElemGen> gens_;
};

MatP gen_matrix(GroupCase c, unsigned n, const ElemGen& g);

// Each generator ge(a) becomes ge(a_0) ge(a_+): the degree-0 part first, then
// the positive-degree remainder. ge(x + y) = ge(x) ge(y) makes this exact.
ElemWord split_word(const ElemWord& w);

// Product of factors equals target exactly whenever checked is true; every
// constructor below verifies by multiplication before setting it.
struct Witness {
  MatP target;
  std::vector<std::pair<std::string, MatP>> factors;
  bool checked = false;
};

Witness make_witness_checked(MatP target, std::vector<std::pair<std::string, MatP>> factors);

// prod_k (a_k b_k) = (prod_k J_k b_k J_k^-1) (prod_k a_k) with J_k = a_1...a_k.
Witness rearrange_product(const std::vector<std::pair<MatP, MatP>>& pairs);

// Result of pushing all degree-0 generator parts to the right and absorbing
// them: pairs of (degree-0 conjugator word, positive-degree core generator).
// The residual word collects every degree-0 part and must evaluate to I when
// the input word evaluates into the level of the positive-degree ideal.
struct ConjugatedWord {
  GroupCase kase;
  unsigned n;
  std::vector<std::pair<ElemWord, ElemGen>> pairs;
  ElemWord residual;
};

ConjugatedWord normalize_mod_plus(const ElemWord& w);

// Word evaluating to the transvection I + M(e_1, w); w must pair to zero with
// e_1 (and, in the orthogonal case, be isotropic). n = w.size().
ElemWord transvection_word(GroupCase c, const VecP& w);

// I + M(v, w) for v = eval(eps) e_1, factored as eps (I + M(e_1, w')) eps^-1
// with w' the transport of w through eps.
Witness transvection_word_conj(const ElemWord& eps, const VecP& w);

// Four-factor rewriting of [alpha, beta] where the degree-0 parts enter only
// through conjugates of the supplied words' evaluations.
Witness commutator_factor(GroupCase c, const MatP& alpha, const MatP& beta,
                          const ElemWord& alpha0_word, const ElemWord& beta0_word);

// prod_k [a_k, b_k] eps(eval) rewritten as prod_k [beta_k, gamma_k] residual
// with beta_k^+(0) = gamma_k^+(0) = I and residual^+(0) = I.
Witness commutator_normal_form(GroupCase c, const std::vector<std::pair<MatP, MatP>>& comms,
                               const ElemWord& eps);

}  // namespace grelem
