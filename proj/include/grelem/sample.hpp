#pragma once

#include <cstdint>
#include <random>

#include "grelem/words.hpp"

namespace grelem {

// Stable 64-bit mix used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic source of small random algebra objects. Coefficients stay
// small (|c| <= 9, denominators <= 9) and polynomials sparse (<= 4 terms,
// degree <= 3) so exact arithmetic stays fast.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi);  // uniform, inclusive
  bool coin() { return range(0, 1) == 1; }

  Scalar scalar(const CoeffRing& ring);
  Scalar nonzero_scalar(const CoeffRing& ring);
  Scalar unit_scalar(const CoeffRing& ring);

  GradedPoly poly(const CoeffRing& ring, unsigned nv, unsigned max_deg = 3,
                  unsigned max_terms = 4);
  GradedPoly nonzero_poly(const CoeffRing& ring, unsigned nv, unsigned max_deg = 3,
                          unsigned max_terms = 4);
  // Element of A_+ (every term has positive degree).
  GradedPoly positive_poly(const CoeffRing& ring, unsigned nv, unsigned max_deg = 3,
                           unsigned max_terms = 3);

  // A legal generator position for the case: i != j, and i != sigma(j) in the
  // orthogonal case.
  std::pair<unsigned, unsigned> gen_index(GroupCase c, unsigned n);

  ElemWord word(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv, unsigned len,
                unsigned max_deg = 3, unsigned max_terms = 4);
  // Word whose evaluation lies in the congruence subgroup: w ++ w^+(0)^-1.
  ElemWord level_word(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv,
                      unsigned half_len, unsigned max_deg = 3, unsigned max_terms = 4);

  // Invertible matrix: evaluated word times a unit diagonal (paired in the
  // symplectic/orthogonal cases so the form is preserved).
  MatP invertible(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv, unsigned len,
                  unsigned max_deg = 3, unsigned max_terms = 4);

  // Admissible transvection datum w: <e1, w> = 0, w_2 = 0; in the orthogonal
  // case the cross-block corner is kept isotropic by using at most one
  // nonzero slot per block.
  VecP transvection_vector(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv);

 private:
  std::mt19937_64 rng_;
};

}  // namespace grelem
