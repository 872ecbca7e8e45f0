#pragma once

#include <string>
#include <vector>

#include "grelem/poly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grelem {

// Square matrix over an exact ring element type R (polynomials or localized
// polynomials). R must provide +, -, *, ==, is_zero, zero_like, one_like.
// Indices are 0-based here; the 1-based generator indices of the group
// calculus are translated at that layer.
template <class R>
class Mat {
public:
  Mat(unsigned n, const R& fill) : n_(n), e_(std::size_t(n) * n, fill) {
    if (n == 0) fail(err::structural, "matrices must have n >= 1");
  }

  static Mat identity(unsigned n, const R& proto) {
    Mat m(n, proto.zero_like());
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = proto.one_like();
    return m;
  }

  unsigned size() const { return n_; }
  R& at(unsigned i, unsigned j) { return e_[std::size_t(i) * n_ + j]; }
  const R& at(unsigned i, unsigned j) const { return e_[std::size_t(i) * n_ + j]; }
  const R& proto() const { return e_[0]; }

  bool operator==(const Mat& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] + o.e_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = r.e_[k] - o.e_[k];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  Mat transpose() const {
    Mat r(n_, proto().zero_like());
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Mat scale(const R& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
  }

  bool is_identity() const {
    const R one = proto().one_like();
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) {
        if (i == j ? !(at(i, j) == one) : !at(i, j).is_zero()) return false;
      }
    return true;
  }

  // Entrywise b^+(t); exact for any degree-0 t of the same coefficient ring.
  Mat plus_eval(const Scalar& t) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x.plus_eval(t);
    return r;
  }

  Mat minor_erased(unsigned row, unsigned col) const {
    internal_check(n_ > 1, "minor of a 1x1 matrix");
    Mat r(n_ - 1, proto().zero_like());
    for (unsigned i = 0, ri = 0; i < n_; ++i) {
      if (i == row) continue;
      for (unsigned j = 0, rj = 0; j < n_; ++j) {
        if (j == col) continue;
        r.at(ri, rj) = at(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (unsigned i = 0; i < n_; ++i) {
      if (i) out += "; ";
      for (unsigned j = 0; j < n_; ++j) {
        if (j) out += ", ";
        out += at(i, j).to_string();
      }
    }
    return out;
  }

  void check_same_shape(const Mat& o) const {
    if (n_ != o.n_) fail(err::structural, "matrix sizes differ");
  }

private:
  unsigned n_;
  std::vector<R> e_;
};

// Reference kernel. Kept alongside the parallel one so tests can assert the
// two produce identical exact results.
template <class R>
Mat<R> mul_serial(const Mat<R>& a, const Mat<R>& b) {
  a.check_same_shape(b);
  const unsigned n = a.size();
  Mat<R> c(n, a.proto().zero_like());
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      R acc = a.proto().zero_like();
      for (unsigned k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  return c;
}

// Output entries are independent symbolic dot products, so the loop is
// embarrassingly parallel and the result is identical to the serial kernel.
template <class R>
Mat<R> mul_parallel(const Mat<R>& a, const Mat<R>& b) {
  a.check_same_shape(b);
  const unsigned n = a.size();
  Mat<R> c(n, a.proto().zero_like());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < long(n) * n; ++idx) {
    const unsigned i = unsigned(idx) / n, j = unsigned(idx) % n;
    R acc = a.proto().zero_like();
    for (unsigned k = 0; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
    c.at(i, j) = acc;
  }
  return c;
}

template <class R>
Mat<R> operator*(const Mat<R>& a, const Mat<R>& b) {
  return a.size() >= 4 ? mul_parallel(a, b) : mul_serial(a, b);
}

using MatP = Mat<GradedPoly>;
using VecP = std::vector<GradedPoly>;

// Fraction-free elimination; exact over any of the supported (domain)
// coefficient rings. Primary determinant path for n > 4.
GradedPoly det_bareiss(const MatP& a);
// Cofactor expansion; the independent route, and the default for n <= 4.
GradedPoly det_cofactor(const MatP& a);
GradedPoly det(const MatP& a);

// Constant polynomial that is a unit of the coefficient ring (+-1 over Z,
// any nonzero constant over a field).
bool is_unit_constant(const GradedPoly& p);

template <class R>
Mat<R> adjugate_from_det(const Mat<R>& a, R (*detfn)(const Mat<R>&)) {
  const unsigned n = a.size();
  Mat<R> adj(n, a.proto().zero_like());
  if (n == 1) {
    adj.at(0, 0) = a.proto().one_like();
    return adj;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      R m = detfn(a.minor_erased(j, i));
      adj.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  return adj;
}

MatP adjugate(const MatP& a);
// Adjugate-based inverse; requires a unit-constant determinant. The product
// against the input is re-checked, so a successful return is a verified
// two-sided inverse. NotInvertible otherwise.
MatP inverse(const MatP& a);

enum class GroupCase { linear, symplectic, orthogonal };
enum class FormKind { psi, psi_tilde };

std::string case_name(GroupCase c);
GroupCase case_parse(const std::string& name);

// The index involution pairing 2i-1 <-> 2i; 1-based, bounds-checked.
unsigned sigma(unsigned i, unsigned n);

struct FormMatrix {
  FormKind kind;
  unsigned m;
  MatP mat;
};

// Rank-m forms assembled from the 2x2 blocks [[0,1],[-1,0]] (psi, alternating)
// and [[0,1],[1,0]] (psi_tilde, symmetric), one block per index pair.
FormMatrix form(unsigned m, FormKind kind, CoeffRing ring, unsigned num_vars);

// <v,w>: v^T w, v^T psi w, or v^T psitilde w by case.
GradedPoly inner_product(GroupCase c, const VecP& v, const VecP& w);
// Rank-one (linear) or form-adapted rank-two companion matrix M(v,w).
MatP m_of(GroupCase c, const VecP& v, const VecP& w);

// linear: unit determinant; symplectic/orthogonal: exact form identity.
bool is_in_G(GroupCase c, const MatP& a);
// Additionally det = 1.
bool is_in_S(GroupCase c, const MatP& a);
// a^+(0) = I: congruence level of the positive-degree ideal.
bool is_level_plus(const MatP& a);

unsigned case_min_n(GroupCase c);  // 3 linear, 6 symplectic/orthogonal
void check_case_n(GroupCase c, unsigned n);  // structural parity/min constraints for constructors

VecP unit_vector(CoeffRing ring, unsigned nvars, unsigned n, unsigned i);  // e_i, 1-based
VecP row_times_mat(const VecP& v, const MatP& a);

}  // namespace grelem
