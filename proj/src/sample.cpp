#include "grelem/sample.hpp"

namespace grelem {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long Sampler::range(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar Sampler::scalar(const CoeffRing& ring) {
  switch (ring.kind) {
    case RingKind::integers:
      return Scalar::of(ring, range(-9, 9));
    case RingKind::rationals: {
      Scalar num = Scalar::of(ring, range(-9, 9));
      Scalar den = Scalar::of(ring, range(1, 9));
      return num * den.inverse();
    }
    case RingKind::prime_field: {
      const long hi = long(std::min<std::uint64_t>(ring.p - 1, 18));
      return Scalar::of(ring, range(0, hi));
    }
  }
  internal_check(false, "unreachable ring kind");
  return Scalar::zero(ring);
}

Scalar Sampler::nonzero_scalar(const CoeffRing& ring) {
  for (;;) {
    Scalar c = scalar(ring);
    if (!c.is_zero()) return c;
  }
}

Scalar Sampler::unit_scalar(const CoeffRing& ring) {
  if (ring.is_field()) return nonzero_scalar(ring);
  return Scalar::of(ring, coin() ? 1 : -1);
}

GradedPoly Sampler::poly(const CoeffRing& ring, unsigned nv, unsigned max_deg,
                         unsigned max_terms) {
  GradedPoly p(ring, nv);
  const long nterms = range(1, long(max_terms));
  for (long t = 0; t < nterms; ++t) {
    std::vector<std::uint32_t> exps(nv, 0);
    if (nv > 0) {
      const long d = range(0, long(max_deg));
      for (long u = 0; u < d; ++u) ++exps[std::size_t(range(0, long(nv) - 1))];
    }
    p.add_term(exps, scalar(ring));
  }
  return p;
}

GradedPoly Sampler::nonzero_poly(const CoeffRing& ring, unsigned nv, unsigned max_deg,
                                 unsigned max_terms) {
  for (;;) {
    GradedPoly p = poly(ring, nv, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

GradedPoly Sampler::positive_poly(const CoeffRing& ring, unsigned nv, unsigned max_deg,
                                  unsigned max_terms) {
  internal_check(nv > 0 && max_deg > 0, "positive-degree terms need a variable");
  GradedPoly p(ring, nv);
  const long nterms = range(1, long(max_terms));
  for (long t = 0; t < nterms; ++t) {
    std::vector<std::uint32_t> exps(nv, 0);
    const long d = range(1, long(max_deg));
    for (long u = 0; u < d; ++u) ++exps[std::size_t(range(0, long(nv) - 1))];
    p.add_term(exps, scalar(ring));
  }
  while (p.is_zero()) {
    std::vector<std::uint32_t> exps(nv, 0);
    exps[0] = 1;
    p.add_term(exps, nonzero_scalar(ring));
  }
  return p;
}

std::pair<unsigned, unsigned> Sampler::gen_index(GroupCase c, unsigned n) {
  // For n = 2 every off-diagonal position has i = sigma(j), so the orthogonal
  // case has no generators at all; rejection sampling would never terminate.
  internal_check(c != GroupCase::orthogonal || n >= 4, "orthogonal generators need n >= 4");
  for (;;) {
    const unsigned i = unsigned(range(1, long(n)));
    const unsigned j = unsigned(range(1, long(n)));
    if (i == j) continue;
    if (c == GroupCase::orthogonal && i == sigma(j, n)) continue;
    return {i, j};
  }
}

ElemWord Sampler::word(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv,
                       unsigned len, unsigned max_deg, unsigned max_terms) {
  ElemWord w(c, n, ring, nv);
  for (unsigned t = 0; t < len; ++t) {
    auto [i, j] = gen_index(c, n);
    w.append(i, j, poly(ring, nv, max_deg, max_terms));
  }
  return w;
}

ElemWord Sampler::level_word(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv,
                             unsigned half_len, unsigned max_deg, unsigned max_terms) {
  ElemWord w = word(c, n, ring, nv, half_len, max_deg, max_terms);
  return w.concat(w.plus_eval(Scalar::zero(ring)).inverse());
}

MatP Sampler::invertible(GroupCase c, unsigned n, const CoeffRing& ring, unsigned nv,
                         unsigned len, unsigned max_deg, unsigned max_terms) {
  MatP m = word(c, n, ring, nv, len, max_deg, max_terms).eval();
  MatP d = MatP::identity(n, GradedPoly(ring, nv));
  if (c == GroupCase::linear) {
    for (unsigned i = 0; i < n; ++i)
      d.at(i, i) = GradedPoly::constant(ring, nv, unit_scalar(ring));
  } else {
    // Paired units keep the form: diag(u, u^-1) per index pair.
    for (unsigned b = 0; b + 1 < n; b += 2) {
      const Scalar u = unit_scalar(ring);
      d.at(b, b) = GradedPoly::constant(ring, nv, u);
      d.at(b + 1, b + 1) = GradedPoly::constant(ring, nv, u.inverse());
    }
  }
  return m * d;
}

VecP Sampler::transvection_vector(GroupCase c, unsigned n, const CoeffRing& ring,
                                  unsigned nv) {
  VecP w(n, GradedPoly(ring, nv));
  switch (c) {
    case GroupCase::linear:
      for (unsigned j = 1; j < n; ++j) w[j] = poly(ring, nv, 2, 2);
      break;
    case GroupCase::symplectic:
      w[0] = poly(ring, nv, 2, 2);
      for (unsigned j = 2; j < n; ++j) w[j] = poly(ring, nv, 2, 2);
      break;
    case GroupCase::orthogonal:
      // At most one nonzero slot per later pair keeps w isotropic.
      for (unsigned b = 2; b + 1 < n; b += 2) w[coin() ? b : b + 1] = poly(ring, nv, 2, 2);
      break;
  }
  return w;
}

}  // namespace grelem
