#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grelem/words.hpp"

namespace grelem {

// num / s^k over the localization at a nonzero degree-0 s. Normal form: k = 0
// whenever s is a unit (always over a field); over Z no further factor of s
// divides every coefficient of num while k > 0; zero is stored as 0 / s^0.
// Equality of normal forms is literal equality of (num, k).
class LocalizedPoly {
public:
  LocalizedPoly(GradedPoly num, unsigned k, Scalar s);

  static LocalizedPoly of(const GradedPoly& num, const Scalar& s) {
    return LocalizedPoly(num, 0, s);
  }

  const GradedPoly& num() const { return num_; }
  unsigned denom_exp() const { return k_; }
  const Scalar& s() const { return s_; }
  const CoeffRing& ring() const { return num_.ring(); }
  unsigned num_vars() const { return num_.num_vars(); }

  LocalizedPoly zero_like() const { return LocalizedPoly(num_.zero_like(), 0, s_); }
  LocalizedPoly one_like() const { return LocalizedPoly(num_.one_like(), 0, s_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return k_ == 0 && num_ == num_.one_like(); }

  LocalizedPoly operator-() const { return LocalizedPoly(-num_, k_, s_); }
  LocalizedPoly operator+(const LocalizedPoly& o) const;
  LocalizedPoly operator-(const LocalizedPoly& o) const { return *this + (-o); }
  LocalizedPoly operator*(const LocalizedPoly& o) const;
  bool operator==(const LocalizedPoly& o) const;
  bool operator!=(const LocalizedPoly& o) const { return !(*this == o); }

  bool is_unit() const;
  LocalizedPoly inverse_of_unit() const;  // NotAUnit unless num = unit * s^j

  // Degree-0 slice (still a localized element; diagonal entries of level
  // matrices normalize to one here).
  LocalizedPoly degree0_part() const;
  LocalizedPoly plus_eval(const Scalar& t) const;

  std::string to_string() const;

private:
  void normalize();
  void check_compatible(const LocalizedPoly& o) const;

  GradedPoly num_;
  unsigned k_;
  Scalar s_;
};

using MatL = Mat<LocalizedPoly>;

LocalizedPoly localize(const GradedPoly& p, const Scalar& s);
MatL localize(const MatP& a, const Scalar& s);

// Common-denominator lift: returns (N, k) with a = N / s^k entrywise.
std::pair<MatP, unsigned> common_lift(const MatL& a);

LocalizedPoly det(const MatL& a);
MatL inverse(const MatL& a);  // NotInvertible unless det is a unit of A_s

bool is_level_plus(const MatL& a);

// Consistency probe for localization at a nonzero s over a domain: equality
// localizes faithfully in both directions. Any disagreement is a fatal
// internal inconsistency, not a result.
bool injectivity_check(const MatP& a, const MatP& b, const Scalar& s);

// Smallest l with a^+(s^l) free of denominators: a degree-d term carrying
// s^k (after per-term cancellation) needs l*d >= k. Requires a^+(0) = I.
unsigned dilation_exponent(const MatL& a);

// The matrix beta over A with localize(beta, s) = a^+(s^l).
// DenominatorNotCleared when l is below the dilation exponent.
MatP dilate_pullback(const MatL& a, unsigned l);

// Pullback of a^+(b + d) a^+(d)^-1 for degree-0 b, d; clears exactly when b
// sits deep enough in (s). The result re-localizes onto the localized product
// (checked).
MatP dilate_difference(const MatL& a, const Scalar& b, const Scalar& d);

// s_i^{l_i} made comaximal with certified multipliers: sum_i c_i s_i^{l_i} = 1.
struct ComaximalData {
  std::vector<Scalar> s;
  std::vector<unsigned> l;
  std::vector<Scalar> c;
  std::vector<Scalar> b;  // b_i = c_i s_i^{l_i}

  Scalar suffix_sum(std::size_t i) const;  // b_i + ... + b_r (1 at i = 0, 0 past the end)
};

ComaximalData comaximal_powers(const std::vector<Scalar>& s, const std::vector<unsigned>& l);

struct PatchCertificate {
  Scalar s;
  unsigned l;
  std::string kind;  // "dilation" | "commutator-expansion"
  bool checked = false;
};

// target = prod factors over A, each factor certified against localized
// arithmetic at its own s_i.
struct PatchWitness {
  MatP target;
  ComaximalData cd;
  std::vector<Scalar> partials;  // suffix sums b_i + ... + b_r, i = 1..r+1
  struct Factor {
    MatP m;
    std::optional<PatchCertificate> cert;
  };
  std::vector<Factor> factors;
  bool checked = false;
};

// Telescoping factorization a = prod_i a^+(B_i) a^+(B_{i+1})^-1 over the
// suffix sums B_i of the comaximal decomposition of 1. Each factor is checked
// against its dilation-based recomputation over A_{s_i}.
PatchWitness telescoping_patch(const MatP& a, const ComaximalData& cd);

// Decomposition of localize(a, s) as prod_k [beta_k, gamma_k] * eps with all
// parts level; supplied per prime to commutator_patch.
struct LocalCommutatorDecomp {
  std::vector<std::pair<MatL, MatL>> pairs;
  MatL eps;
};

// Telescoping factorization of a determinant-1 level matrix whose factors are
// certified by expanding the supplied local commutator decompositions through
// plus-evaluation at the two suffix sums.
PatchWitness commutator_patch(const MatP& a, const ComaximalData& cd,
                              const std::vector<LocalCommutatorDecomp>& local_data);

// Semilocal coefficient instance for unimodular completion: a field (Q, F_p)
// or Z localized at a prime (exact rationals with p-integral denominator).
struct SemilocalInstance {
  enum class Kind { field, z_local_at_prime };
  Kind kind;
  CoeffRing ring;        // field: the ring itself; z_local_at_prime: rationals
  std::uint64_t prime = 0;

  static SemilocalInstance field(CoeffRing r);
  static SemilocalInstance z_local_at_prime(std::uint64_t p);

  bool is_member(const Scalar& x) const;
  bool is_unit(const Scalar& x) const;
};

// Word eps with (row) v * eval(eps) = e_1; every generator argument lies in
// the instance ring. NotUnimodular when no coordinate is an instance unit.
ElemWord complete_unimodular(const VecP& v, const SemilocalInstance& inst);

}  // namespace grelem
