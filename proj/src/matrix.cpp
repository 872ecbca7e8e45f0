#include "grelem/matrix.hpp"

namespace grelem {

GradedPoly det_bareiss(const MatP& a) {
  const unsigned n = a.size();
  if (n == 1) return a.at(0, 0);
  MatP m = a;
  GradedPoly prev = a.proto().one_like();
  bool negate = false;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      unsigned r = k + 1;
      while (r < n && m.at(r, k).is_zero()) ++r;
      if (r == n) return a.proto().zero_like();
      for (unsigned j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      negate = !negate;
    }
    // One-step condensation: every 2x2 minor against the pivot divides
    // exactly by the previous pivot (Sylvester identity over a domain).
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (n - k > 4)
#endif
    for (long i = k + 1; i < long(n); ++i)
      for (unsigned j = k + 1; j < n; ++j)
        m.at(unsigned(i), j) =
            (m.at(k, k) * m.at(unsigned(i), j) - m.at(unsigned(i), k) * m.at(k, j)).exact_div(prev);
    for (unsigned i = k + 1; i < n; ++i) m.at(i, k) = a.proto().zero_like();
    prev = m.at(k, k);
  }
  return negate ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

GradedPoly det_cofactor(const MatP& a) {
  const unsigned n = a.size();
  if (n == 1) return a.at(0, 0);
  GradedPoly acc = a.proto().zero_like();
  for (unsigned j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    GradedPoly piece = a.at(0, j) * det_cofactor(a.minor_erased(0, j));
    acc = (j % 2 == 0) ? acc + piece : acc - piece;
  }
  return acc;
}

// Cofactor expansion prunes zero entries, which wins on the sparse
// near-identity matrices words evaluate to; fraction-free condensation keeps
// intermediate growth polynomial once sizes pass what pruning can save.
GradedPoly det(const MatP& a) { return a.size() <= 6 ? det_cofactor(a) : det_bareiss(a); }

bool is_unit_constant(const GradedPoly& p) { return p.is_constant() && p.constant_term().is_unit(); }

MatP adjugate(const MatP& a) { return adjugate_from_det<GradedPoly>(a, &det); }

MatP inverse(const MatP& a) {
  GradedPoly d = det(a);
  if (!is_unit_constant(d))
    fail(err::not_invertible, "determinant " + d.to_string() + " is not a unit constant");
  const Scalar u = d.constant_term().inverse();
  MatP inv = adjugate(a).scale(GradedPoly::constant(a.proto().ring(), a.proto().num_vars(), u));
  internal_check(mul_serial(a, inv).is_identity(), "adjugate inverse check");
  return inv;
}

std::string case_name(GroupCase c) {
  switch (c) {
    case GroupCase::linear: return "linear";
    case GroupCase::symplectic: return "symplectic";
    case GroupCase::orthogonal: return "orthogonal";
  }
  return "?";
}

GroupCase case_parse(const std::string& name) {
  if (name == "linear") return GroupCase::linear;
  if (name == "symplectic") return GroupCase::symplectic;
  if (name == "orthogonal") return GroupCase::orthogonal;
  fail(err::parse, "unknown case '" + name + "'");
}

unsigned sigma(unsigned i, unsigned n) {
  if (i < 1 || i > n) fail(err::structural, "sigma index out of range");
  return (i % 2 == 0) ? i - 1 : i + 1;
}

FormMatrix form(unsigned m, FormKind kind, CoeffRing ring, unsigned num_vars) {
  if (m < 1) fail(err::structural, "form rank must be >= 1");
  const GradedPoly zero(ring, num_vars);
  const GradedPoly one = zero.one_like();
  MatP f(2 * m, zero);
  for (unsigned b = 0; b < m; ++b) {
    f.at(2 * b, 2 * b + 1) = one;
    f.at(2 * b + 1, 2 * b) = (kind == FormKind::psi) ? -one : one;
  }
  return FormMatrix{kind, m, f};
}

namespace {

void check_vectors(GroupCase c, const VecP& v, const VecP& w) {
  if (v.empty() || v.size() != w.size()) fail(err::structural, "vector lengths differ or empty");
  if (c != GroupCase::linear && v.size() % 2 != 0)
    fail(err::structural, "symplectic/orthogonal vectors need even length");
  for (const auto& x : v)
    if (!(x.ring() == v[0].ring()) || x.num_vars() != v[0].num_vars())
      fail(err::ring_mismatch, "vector entries over different rings");
  for (const auto& x : w)
    if (!(x.ring() == v[0].ring()) || x.num_vars() != v[0].num_vars())
      fail(err::ring_mismatch, "vector entries over different rings");
}

// Row vector v~ = v^T * form for the case (identity form when linear).
VecP tilde(GroupCase c, const VecP& v) {
  if (c == GroupCase::linear) return v;
  VecP r(v.size(), v[0].zero_like());
  for (std::size_t b = 0; b + 1 < v.size(); b += 2) {
    // Against one 2x2 block: psi sends (a, b) to (-b, a); psi_tilde to (b, a).
    r[b] = (c == GroupCase::symplectic) ? -v[b + 1] : v[b + 1];
    r[b + 1] = v[b];
  }
  return r;
}

}  // namespace

GradedPoly inner_product(GroupCase c, const VecP& v, const VecP& w) {
  check_vectors(c, v, w);
  const VecP vt = tilde(c, v);
  GradedPoly acc = v[0].zero_like();
  for (std::size_t i = 0; i < w.size(); ++i) acc += vt[i] * w[i];
  return acc;
}

MatP m_of(GroupCase c, const VecP& v, const VecP& w) {
  check_vectors(c, v, w);
  const unsigned n = unsigned(v.size());
  MatP m(n, v[0].zero_like());
  if (c == GroupCase::linear) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) m.at(i, j) = v[i] * w[j];
    return m;
  }
  const VecP vt = tilde(c, v), wt = tilde(c, w);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      GradedPoly s = v[i] * wt[j];
      GradedPoly t = w[i] * vt[j];
      m.at(i, j) = (c == GroupCase::symplectic) ? s + t : s - t;
    }
  return m;
}

bool is_in_G(GroupCase c, const MatP& a) {
  const unsigned n = a.size();
  if (c == GroupCase::linear) return is_unit_constant(det(a));
  if (n % 2 != 0) fail(err::structural, "symplectic/orthogonal matrices need even n");
  const FormKind kind = (c == GroupCase::symplectic) ? FormKind::psi : FormKind::psi_tilde;
  const MatP f = form(n / 2, kind, a.proto().ring(), a.proto().num_vars()).mat;
  return mul_serial(mul_serial(a.transpose(), f), a) == f;
}

bool is_in_S(GroupCase c, const MatP& a) {
  if (!is_in_G(c, a)) return false;
  GradedPoly d = det(a);
  return d == a.proto().one_like();
}

bool is_level_plus(const MatP& a) {
  const Scalar one = Scalar::one(a.proto().ring());
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) {
      const Scalar c0 = a.at(i, j).constant_term();
      if (i == j ? !(c0 == one) : !c0.is_zero()) return false;
    }
  return true;
}

unsigned case_min_n(GroupCase c) { return c == GroupCase::linear ? 3 : 6; }

void check_case_n(GroupCase c, unsigned n) {
  if (c == GroupCase::linear) {
    if (n < 2) fail(err::structural, "linear case needs n >= 2");
  } else {
    if (n < 2 || n % 2 != 0) fail(err::structural, "symplectic/orthogonal cases need even n >= 2");
  }
}

VecP unit_vector(CoeffRing ring, unsigned nvars, unsigned n, unsigned i) {
  if (i < 1 || i > n) fail(err::structural, "unit vector index out of range");
  VecP v(n, GradedPoly(ring, nvars));
  v[i - 1] = v[i - 1].one_like();
  return v;
}

VecP row_times_mat(const VecP& v, const MatP& a) {
  if (v.size() != a.size()) fail(err::structural, "row/matrix size mismatch");
  VecP r(v.size(), v[0].zero_like());
  for (unsigned j = 0; j < a.size(); ++j) {
    GradedPoly acc = v[0].zero_like();
    for (unsigned i = 0; i < a.size(); ++i) acc += v[i] * a.at(i, j);
    r[j] = acc;
  }
  return r;
}

}  // namespace grelem
