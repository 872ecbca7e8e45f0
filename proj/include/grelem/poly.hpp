#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grelem/scalar.hpp"

namespace grelem {

// Multivariate polynomial over Z, Q, or F_p, graded by total degree.
// Canonical form: terms sorted by (total degree, then lexicographic exponent
// vector) ascending, no zero coefficients, exponent vectors of length
// num_vars. Equality, printing, and serialization all read off this form.
class GradedPoly {
public:
  struct Term {
    std::vector<std::uint32_t> exps;
    Scalar coeff;
    unsigned degree() const;
  };

  GradedPoly() : GradedPoly(CoeffRing::integers(), 0) {}
  GradedPoly(CoeffRing ring, unsigned num_vars) : ring_(ring), nvars_(num_vars) {}

  static GradedPoly constant(CoeffRing r, unsigned nv, const Scalar& c);
  static GradedPoly constant(CoeffRing r, unsigned nv, long c);
  static GradedPoly variable(CoeffRing r, unsigned nv, unsigned idx);  // x_idx, 1-based
  static GradedPoly monomial(CoeffRing r, unsigned nv, std::vector<std::uint32_t> exps,
                             const Scalar& c);

  const CoeffRing& ring() const { return ring_; }
  unsigned num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  GradedPoly zero_like() const { return GradedPoly(ring_, nvars_); }
  GradedPoly one_like() const { return constant(ring_, nvars_, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the all-zero exponent vector (the degree-0 coefficient).
  Scalar constant_term() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  GradedPoly operator-() const;
  GradedPoly operator+(const GradedPoly& o) const;
  GradedPoly operator-(const GradedPoly& o) const;
  GradedPoly operator*(const GradedPoly& o) const;
  GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
  GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }
  bool operator==(const GradedPoly& o) const;
  bool operator!=(const GradedPoly& o) const { return !(*this == o); }

  GradedPoly scale(const Scalar& c) const;
  GradedPoly pow(unsigned e) const;
  // Exact quotient *this / d; NotDivisible when d does not divide exactly.
  GradedPoly exact_div(const GradedPoly& d) const;
  // True when c divides every coefficient (used by denominator clearing).
  bool coeffs_divisible_by(const Scalar& c) const;
  GradedPoly coeffs_div_exact(const Scalar& c) const;

  // Degree-i slice b_i of b = b_0 + b_1 + b_2 + ...
  GradedPoly homogeneous_component(unsigned i) const;
  // All nonzero slices, degrees strictly increasing.
  std::vector<std::pair<unsigned, GradedPoly>> grade_decompose() const;
  // b^+(t) = sum_i b_i t^i for a degree-0 t: each degree-d term picks t^d.
  GradedPoly plus_eval(const Scalar& t) const;
  GradedPoly plus_eval(const GradedPoly& t) const;  // t must be constant

  std::string to_string() const;
  static std::vector<std::string> var_names(unsigned nv);

  // Appends c * x^exps to the term list, merging into canonical form.
  void add_term(std::vector<std::uint32_t> exps, const Scalar& c);

private:
  void check_compatible(const GradedPoly& o) const;

  CoeffRing ring_;
  unsigned nvars_ = 0;
  std::vector<Term> terms_;
};

// Ascending total degree, then lexicographic with x1 > x2 > ... inside a degree.
bool term_order_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

// Polynomial in one extra formal variable X whose X^i coefficient is a
// GradedPoly. The homotopy extension of b places the degree-i slice of b at
// X^i; ring operations here mirror those of the base ring, which is what the
// homomorphism laws quantify over.
class XPoly {
public:
  XPoly(CoeffRing ring, unsigned nvars) : ring_(ring), nvars_(nvars) {}

  static XPoly from_coeffs(std::vector<GradedPoly> cs);

  const CoeffRing& ring() const { return ring_; }
  unsigned num_vars() const { return nvars_; }
  const std::vector<GradedPoly>& coeffs() const { return coeffs_; }
  GradedPoly coeff(unsigned i) const;  // zero beyond the X-degree
  unsigned x_degree() const { return coeffs_.empty() ? 0 : unsigned(coeffs_.size() - 1); }
  bool is_zero() const { return coeffs_.empty(); }

  XPoly operator+(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  bool operator==(const XPoly& o) const;

  // Substitutes X = t; equals plus_eval of the assembled polynomial.
  GradedPoly eval_at(const Scalar& t) const;

private:
  void trim();

  CoeffRing ring_;
  unsigned nvars_;
  std::vector<GradedPoly> coeffs_;  // no trailing zero entry
};

// epsilon(b): degree-i slice of b becomes the X^i coefficient.
XPoly swan_weibel_extend(const GradedPoly& b);

}  // namespace grelem
