#include "grelem/localize.hpp"

namespace grelem {

LocalizedPoly::LocalizedPoly(GradedPoly num, unsigned k, Scalar s)
    : num_(std::move(num)), k_(k), s_(std::move(s)) {
  if (!(s_.ring() == num_.ring()))
    fail(err::ring_mismatch, "localization element over the wrong ring");
  if (s_.is_zero()) fail(err::structural, "cannot localize at zero");
  normalize();
}

void LocalizedPoly::normalize() {
  if (num_.is_zero()) {
    k_ = 0;
    return;
  }
  if (s_.is_unit()) {
    if (k_ > 0) num_ = num_.scale(s_.inverse().pow(k_));
    k_ = 0;
    return;
  }
  while (k_ > 0 && num_.coeffs_divisible_by(s_)) {
    num_ = num_.coeffs_div_exact(s_);
    --k_;
  }
}

void LocalizedPoly::check_compatible(const LocalizedPoly& o) const {
  if (!(s_ == o.s_)) fail(err::structural, "mixing localizations at different elements");
  if (!(ring() == o.ring()) || num_vars() != o.num_vars())
    fail(err::ring_mismatch, "localized elements over different rings");
}

LocalizedPoly LocalizedPoly::operator+(const LocalizedPoly& o) const {
  check_compatible(o);
  const unsigned k = std::max(k_, o.k_);
  GradedPoly sum = num_.scale(s_.pow(k - k_)) + o.num_.scale(s_.pow(k - o.k_));
  return LocalizedPoly(std::move(sum), k, s_);
}

LocalizedPoly LocalizedPoly::operator*(const LocalizedPoly& o) const {
  check_compatible(o);
  return LocalizedPoly(num_ * o.num_, k_ + o.k_, s_);
}

bool LocalizedPoly::operator==(const LocalizedPoly& o) const {
  check_compatible(o);
  return k_ == o.k_ && num_ == o.num_;
}

namespace {

// num = u * s^j with u a unit constant; nullopt when the element is not a
// unit of A_s.
std::optional<std::pair<Scalar, unsigned>> unit_split(const GradedPoly& num, const Scalar& s) {
  if (!num.is_constant() || num.is_zero()) return std::nullopt;
  Scalar c = num.constant_term();
  unsigned j = 0;
  if (!s.is_unit()) {
    const unsigned cap =
        unsigned(mpz_sizeinbase(c.value().get_num().get_mpz_t(), 2));  // j <= log2|c| since |s| >= 2
    j = c.valuation(s, cap);
    c = c.div_exact(s.pow(j));
  }
  if (!c.is_unit()) return std::nullopt;
  return std::make_pair(c, j);
}

}  // namespace

bool LocalizedPoly::is_unit() const { return unit_split(num_, s_).has_value(); }

LocalizedPoly LocalizedPoly::inverse_of_unit() const {
  auto split = unit_split(num_, s_);
  if (!split) fail(err::not_a_unit, to_string() + " is not a unit of the localization");
  const auto& [u, j] = *split;
  // (u s^j / s^k)^-1 = u^-1 s^k / s^j
  GradedPoly n = GradedPoly::constant(ring(), num_vars(), u.inverse() * s_.pow(k_));
  return LocalizedPoly(std::move(n), j, s_);
}

LocalizedPoly LocalizedPoly::degree0_part() const {
  return LocalizedPoly(num_.homogeneous_component(0), k_, s_);
}

LocalizedPoly LocalizedPoly::plus_eval(const Scalar& t) const {
  return LocalizedPoly(num_.plus_eval(t), k_, s_);
}

std::string LocalizedPoly::to_string() const {
  if (k_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/" + s_.to_string() + "^" + std::to_string(k_);
}

LocalizedPoly localize(const GradedPoly& p, const Scalar& s) { return LocalizedPoly(p, 0, s); }

MatL localize(const MatP& a, const Scalar& s) {
  MatL r(a.size(), localize(a.proto().zero_like(), s));
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) r.at(i, j) = localize(a.at(i, j), s);
  return r;
}

std::pair<MatP, unsigned> common_lift(const MatL& a) {
  unsigned k = 0;
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) k = std::max(k, a.at(i, j).denom_exp());
  const Scalar& s = a.proto().s();
  MatP n(a.size(), a.proto().num().zero_like());
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j)
      n.at(i, j) = a.at(i, j).num().scale(s.pow(k - a.at(i, j).denom_exp()));
  return {std::move(n), k};
}

LocalizedPoly det(const MatL& a) {
  auto [n, k] = common_lift(a);
  return LocalizedPoly(det(n), k * a.size(), a.proto().s());
}

MatL inverse(const MatL& a) {
  LocalizedPoly d = det(a);
  if (!d.is_unit())
    fail(err::not_invertible, "determinant " + d.to_string() + " is not a unit of the localization");
  MatL inv = adjugate_from_det<LocalizedPoly>(a, static_cast<LocalizedPoly (*)(const MatL&)>(&det))
                 .scale(d.inverse_of_unit());
  internal_check(mul_serial(a, inv).is_identity(), "adjugate inverse check (localized)");
  return inv;
}

bool is_level_plus(const MatL& a) {
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) {
      const LocalizedPoly d0 = a.at(i, j).degree0_part();
      if (i == j ? !d0.is_one() : !d0.is_zero()) return false;
    }
  return true;
}

bool injectivity_check(const MatP& a, const MatP& b, const Scalar& s) {
  const bool locally_equal = localize(a, s) == localize(b, s);
  const bool equal = a == b;
  internal_check(locally_equal == equal, "localization at a nonzero element must stay injective");
  return locally_equal == equal;
}

unsigned dilation_exponent(const MatL& a) {
  if (!is_level_plus(a))
    fail(err::not_level, "the degree-0 part cannot be dilated away; a^+(0) must be I");
  unsigned l = 0;
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) {
      const LocalizedPoly& e = a.at(i, j);
      const unsigned k = e.denom_exp();
      if (k == 0) continue;
      for (const auto& t : e.num().terms()) {
        const unsigned d = t.degree();
        if (d == 0) continue;  // level precondition leaves these integral
        const unsigned v = t.coeff.valuation(e.s(), k);
        if (v < k) l = std::max(l, (k - v + d - 1) / d);
      }
    }
  return l;
}

namespace {

MatP clear_denominators(const MatL& a, const char* what) {
  MatP out(a.size(), a.proto().num().zero_like());
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j) {
      if (a.at(i, j).denom_exp() != 0)
        fail(err::denominator, std::string(what) + ": entry (" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + ") keeps denominator " +
                                   a.at(i, j).to_string());
      out.at(i, j) = a.at(i, j).num();
    }
  return out;
}

}  // namespace

MatP dilate_pullback(const MatL& a, unsigned l) {
  if (!is_level_plus(a))
    fail(err::not_level, "the degree-0 part cannot be dilated away; a^+(0) must be I");
  const MatL image = a.plus_eval(a.proto().s().pow(l));
  MatP out = clear_denominators(image, "dilation pullback");
  internal_check(localize(out, a.proto().s()) == image, "pullback must re-localize onto a^+(s^l)");
  return out;
}

MatP dilate_difference(const MatL& a, const Scalar& b, const Scalar& d) {
  const MatL prod = a.plus_eval(b + d) * inverse(a.plus_eval(d));
  MatP out = clear_denominators(prod, "dilated difference");
  internal_check(localize(out, a.proto().s()) == prod,
                 "difference pullback must re-localize onto a^+(b+d) a^+(d)^-1");
  return out;
}

Scalar ComaximalData::suffix_sum(std::size_t i) const {
  Scalar acc = Scalar::zero(b.empty() ? CoeffRing::integers() : b[0].ring());
  for (std::size_t t = i; t < b.size(); ++t) acc += b[t];
  return acc;
}

ComaximalData comaximal_powers(const std::vector<Scalar>& s, const std::vector<unsigned>& l) {
  if (s.empty() || s.size() != l.size())
    fail(err::structural, "comaximal data needs matching nonempty s and l lists");
  const CoeffRing ring = s[0].ring();
  for (const Scalar& si : s) {
    if (!(si.ring() == ring)) fail(err::ring_mismatch, "comaximal elements over different rings");
    if (si.is_zero()) fail(err::structural, "comaximal elements must be nonzero");
  }
  ComaximalData cd;
  cd.s = s;
  cd.l = l;
  const std::size_t r = s.size();

  std::vector<Scalar> g(r, Scalar::zero(ring));
  for (std::size_t i = 0; i < r; ++i) g[i] = s[i].pow(l[i]);

  if (ring.is_field()) {
    cd.c.assign(r, Scalar::zero(ring));
    cd.c[0] = g[0].inverse();
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        mpz_class gij;
        mpz_gcd(gij.get_mpz_t(), g[i].value().get_num().get_mpz_t(),
                g[j].value().get_num().get_mpz_t());
        if (gij != 1)
          fail(err::not_comaximal, "gcd(" + g[i].to_string() + ", " + g[j].to_string() +
                                       ") = " + gij.get_str() + " is not 1");
      }
    // Iterated extended gcd: running gcd d with certified multipliers.
    std::vector<mpz_class> coeff(r, 0);
    mpz_class d = g[0].value().get_num();
    coeff[0] = 1;
    for (std::size_t i = 1; i < r; ++i) {
      mpz_class nd, u, v;
      mpz_gcdext(nd.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t(),
                 g[i].value().get_num().get_mpz_t());
      for (std::size_t t = 0; t < i; ++t) coeff[t] *= u;
      coeff[i] = v;
      d = nd;
    }
    if (d == -1) {
      d = 1;
      for (auto& c : coeff) c = -c;
    }
    if (d != 1)
      fail(err::not_comaximal, "the raised powers generate (" + d.get_str() + "), not the unit ideal");
    for (std::size_t i = 0; i < r; ++i) cd.c.push_back(Scalar(ring, mpq_class(coeff[i])));
  }

  Scalar sum = Scalar::zero(ring);
  for (std::size_t i = 0; i < r; ++i) {
    cd.b.push_back(cd.c[i] * g[i]);
    sum += cd.b.back();
  }
  internal_check(sum.is_one(), "comaximal multipliers must sum to 1");
  return cd;
}

PatchWitness telescoping_patch(const MatP& a, const ComaximalData& cd) {
  if (!is_level_plus(a)) fail(err::not_level, "patching needs a^+(0) = I");
  if (!is_unit_constant(det(a)))
    fail(err::precondition, "patching needs a unit-constant determinant");

  PatchWitness w{a, cd, {}, {}, false};
  const std::size_t r = cd.s.size();
  for (std::size_t i = 0; i <= r; ++i) w.partials.push_back(cd.suffix_sum(i));

  MatP prod = MatP::identity(a.size(), a.proto().zero_like());
  for (std::size_t i = 0; i < r; ++i) {
    MatP f = a.plus_eval(w.partials[i]) * inverse(a.plus_eval(w.partials[i + 1]));
    // Independent route: the same factor through localized arithmetic at s_i.
    MatP g = dilate_difference(localize(a, cd.s[i]), cd.b[i], w.partials[i + 1]);
    internal_check(g == f, "telescoping factor must match its dilated recomputation");
    prod = prod * f;
    w.factors.push_back({std::move(f), PatchCertificate{cd.s[i], cd.l[i], "dilation", true}});
  }
  internal_check(prod == a, "telescoping factors must multiply back to the target");
  w.checked = true;
  return w;
}

PatchWitness commutator_patch(const MatP& a, const ComaximalData& cd,
                              const std::vector<LocalCommutatorDecomp>& local_data) {
  if (!(det(a) == a.proto().one_like()))
    fail(err::precondition, "commutator patching needs determinant 1");
  if (!is_level_plus(a)) fail(err::not_level, "patching needs a^+(0) = I");
  const std::size_t r = cd.s.size();
  if (local_data.size() != r)
    fail(err::bad_local_data, "need one local decomposition per comaximal element");

  // Validate every local decomposition before producing anything.
  for (std::size_t i = 0; i < r; ++i) {
    const auto& ld = local_data[i];
    const MatL a_s = localize(a, cd.s[i]);
    MatL prod = MatL::identity(a.size(), a_s.proto().zero_like());
    for (const auto& [beta, gamma] : ld.pairs) {
      if (!(beta.proto().s() == cd.s[i]) || !(gamma.proto().s() == cd.s[i]))
        fail(err::bad_local_data, "local decomposition localized at the wrong element");
      if (!is_level_plus(beta) || !is_level_plus(gamma))
        fail(err::bad_local_data, "local commutator parts must satisfy beta^+(0) = gamma^+(0) = I");
      prod = prod * beta * gamma * inverse(beta) * inverse(gamma);
    }
    if (!(ld.eps.proto().s() == cd.s[i]))
      fail(err::bad_local_data, "local decomposition localized at the wrong element");
    if (!is_level_plus(ld.eps))
      fail(err::bad_local_data, "local residual must satisfy eps^+(0) = I");
    if (!(prod * ld.eps == a_s))
      fail(err::bad_local_data, "local decomposition does not multiply to the localized target");
  }

  PatchWitness w{a, cd, {}, {}, false};
  for (std::size_t i = 0; i <= r; ++i) w.partials.push_back(cd.suffix_sum(i));

  MatP prod = MatP::identity(a.size(), a.proto().zero_like());
  for (std::size_t i = 0; i < r; ++i) {
    const Scalar t1 = w.partials[i], t0 = w.partials[i + 1];
    MatP f = a.plus_eval(t1) * inverse(a.plus_eval(t0));
    // Expansion through the local decomposition: commutators of the
    // plus-evaluated parts at t1, the residual difference, then the reversed
    // commutators at t0.
    const auto& ld = local_data[i];
    MatL expansion = MatL::identity(a.size(), localize(a.proto().zero_like(), cd.s[i]));
    for (const auto& [beta, gamma] : ld.pairs) {
      const MatL b1 = beta.plus_eval(t1), g1 = gamma.plus_eval(t1);
      expansion = expansion * b1 * g1 * inverse(b1) * inverse(g1);
    }
    expansion = expansion * ld.eps.plus_eval(t1) * inverse(ld.eps.plus_eval(t0));
    for (auto it = ld.pairs.rbegin(); it != ld.pairs.rend(); ++it) {
      const MatL b0 = it->first.plus_eval(t0), g0 = it->second.plus_eval(t0);
      expansion = expansion * g0 * b0 * inverse(g0) * inverse(b0);
    }
    internal_check(localize(f, cd.s[i]) == expansion,
                   "factor must match its local commutator expansion");
    prod = prod * f;
    w.factors.push_back(
        {std::move(f), PatchCertificate{cd.s[i], cd.l[i], "commutator-expansion", true}});
  }
  internal_check(prod == a, "telescoping factors must multiply back to the target");
  w.checked = true;
  return w;
}

SemilocalInstance SemilocalInstance::field(CoeffRing r) {
  if (!r.is_field()) fail(err::structural, "field instance needs a field coefficient ring");
  return SemilocalInstance{Kind::field, r, 0};
}

SemilocalInstance SemilocalInstance::z_local_at_prime(std::uint64_t p) {
  CoeffRing::prime_field(p);  // validates primality
  return SemilocalInstance{Kind::z_local_at_prime, CoeffRing::rationals(), p};
}

bool SemilocalInstance::is_member(const Scalar& x) const {
  if (!(x.ring() == ring)) return false;
  if (kind == Kind::field) return true;
  return mpz_divisible_ui_p(x.value().get_den().get_mpz_t(), static_cast<unsigned long>(prime)) == 0;
}

bool SemilocalInstance::is_unit(const Scalar& x) const {
  if (!is_member(x) || x.is_zero()) return false;
  if (kind == Kind::field) return true;
  return mpz_divisible_ui_p(x.value().get_num().get_mpz_t(), static_cast<unsigned long>(prime)) == 0;
}

ElemWord complete_unimodular(const VecP& v, const SemilocalInstance& inst) {
  const unsigned n = unsigned(v.size());
  if (n < 2) fail(err::structural, "completion needs a row of length >= 2");
  std::vector<Scalar> x;
  for (const GradedPoly& p : v) {
    if (!p.is_constant()) fail(err::structural, "completion works on degree-0 rows");
    if (!(p.ring() == inst.ring)) fail(err::ring_mismatch, "row over the wrong instance ring");
    if (!inst.is_member(p.constant_term()))
      fail(err::structural, "row entry " + p.to_string() + " lies outside the instance ring");
    x.push_back(p.constant_term());
  }

  unsigned unit_at = n;  // first instance-unit coordinate, n = none
  for (unsigned i = 0; i < n; ++i)
    if (inst.is_unit(x[i])) {
      unit_at = i;
      break;
    }
  if (unit_at == n)
    fail(err::not_unimodular, "no coordinate is a unit of the local instance, so the row is not unimodular");

  const unsigned nv = v[0].num_vars();
  ElemWord eps(GroupCase::linear, n, inst.ring, nv);
  const Scalar one = Scalar::one(inst.ring);
  // Right multiplication by E_ij(c) adds x_i * c to coordinate j.
  auto apply = [&](unsigned i, unsigned j, const Scalar& c) {
    if (c.is_zero()) return;
    eps.append(i, j, GradedPoly::constant(inst.ring, nv, c));
    x[j - 1] += x[i - 1] * c;
  };

  if (!(x[0] == one)) {
    if (unit_at > 0) {
      apply(unit_at + 1, 1, (one - x[0]) * x[unit_at].inverse());
    } else {
      // Only coordinate 1 is usable: park a 1 in coordinate 2, then fix
      // coordinate 1 from it. Two operations, as few as rescaling-free
      // elementary moves allow.
      apply(1, 2, (one - x[1]) * x[0].inverse());
      apply(2, 1, one - x[0]);
    }
  }
  internal_check(x[0] == one, "mass must have reached coordinate 1");
  for (unsigned j = 2; j <= n; ++j) apply(1, j, -x[j - 1]);

  for (unsigned i = 1; i < n; ++i) internal_check(x[i].is_zero(), "cleared coordinates must vanish");
  for (const ElemGen& g : eps.gens())
    internal_check(inst.is_member(g.arg.constant_term()), "word arguments must stay in the instance");
  VecP row = row_times_mat(v, eps.eval());
  internal_check(row == unit_vector(inst.ring, nv, n, 1), "completion must move the row onto e_1");
  return eps;
}

}  // namespace grelem
