#include "grelem/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace grelem {

unsigned GradedPoly::Term::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0u);
}

bool term_order_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a > b;  // within a degree x1 sorts before x2: graded lex with x1 > x2
}

GradedPoly GradedPoly::constant(CoeffRing r, unsigned nv, const Scalar& c) {
  GradedPoly p(r, nv);
  p.add_term(std::vector<std::uint32_t>(nv, 0), c);
  return p;
}

GradedPoly GradedPoly::constant(CoeffRing r, unsigned nv, long c) {
  return constant(r, nv, Scalar::of(r, c));
}

GradedPoly GradedPoly::variable(CoeffRing r, unsigned nv, unsigned idx) {
  if (idx < 1 || idx > nv)
    fail(err::structural, "variable index " + std::to_string(idx) + " out of range for " +
                              std::to_string(nv) + " variables");
  std::vector<std::uint32_t> e(nv, 0);
  e[idx - 1] = 1;
  return monomial(r, nv, std::move(e), Scalar::one(r));
}

GradedPoly GradedPoly::monomial(CoeffRing r, unsigned nv, std::vector<std::uint32_t> exps,
                                const Scalar& c) {
  if (exps.size() != nv) fail(err::structural, "exponent vector length != num_vars");
  GradedPoly p(r, nv);
  p.add_term(std::move(exps), c);
  return p;
}

void GradedPoly::add_term(std::vector<std::uint32_t> exps, const Scalar& c) {
  if (exps.size() != nvars_) fail(err::structural, "exponent vector length != num_vars");
  if (!(c.ring() == ring_)) fail(err::ring_mismatch, "coefficient ring differs from polynomial ring");
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const std::vector<std::uint32_t>& e) {
                               return term_order_less(t.exps, e);
                             });
  if (it != terms_.end() && it->exps == exps) {
    it->coeff += c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{std::move(exps), c});
  }
}

void GradedPoly::check_compatible(const GradedPoly& o) const {
  if (!(ring_ == o.ring_))
    fail(err::ring_mismatch, "polynomial rings differ: " + ring_.name() + " vs " + o.ring_.name());
  if (nvars_ != o.nvars_) fail(err::structural, "polynomial variable counts differ");
}

bool GradedPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].degree() == 0);
}

Scalar GradedPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].degree() == 0) return terms_[0].coeff;
  return Scalar::zero(ring_);
}

int GradedPoly::degree() const {
  return terms_.empty() ? -1 : int(terms_.back().degree());
}

bool GradedPoly::is_homogeneous() const {
  return terms_.empty() || terms_.front().degree() == terms_.back().degree();
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(ring_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.exps, -t.coeff});
  return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
  check_compatible(o);
  GradedPoly r(ring_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].exps == o.terms_[j].exps) {
      Scalar c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back(Term{terms_[i].exps, c});
      ++i, ++j;
    } else if (term_order_less(terms_[i].exps, o.terms_[j].exps)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const { return *this + (-o); }

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
  check_compatible(o);
  std::map<std::vector<std::uint32_t>, Scalar,
           bool (*)(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&)>
      acc(term_order_less);
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      std::vector<std::uint32_t> e(nvars_);
      for (unsigned k = 0; k < nvars_; ++k) e[k] = a.exps[k] + b.exps[k];
      Scalar c = a.coeff * b.coeff;
      auto [it, fresh] = acc.emplace(std::move(e), c);
      if (!fresh) it->second += c;
    }
  }
  GradedPoly r(ring_, nvars_);
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.push_back(Term{e, c});
  return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
  if (!(ring_ == o.ring_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

GradedPoly GradedPoly::scale(const Scalar& c) const {
  GradedPoly r(ring_, nvars_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Scalar cc = t.coeff * c;
    if (!cc.is_zero()) r.terms_.push_back(Term{t.exps, cc});
  }
  return r;
}

GradedPoly GradedPoly::pow(unsigned e) const {
  GradedPoly acc = one_like(), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GradedPoly GradedPoly::exact_div(const GradedPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) fail(err::not_divisible, "division by the zero polynomial");
  GradedPoly rem = *this, q(ring_, nvars_);
  const Term& dl = d.terms_.back();  // leading term in the graded order
  while (!rem.is_zero()) {
    const Term& rl = rem.terms_.back();
    std::vector<std::uint32_t> e(nvars_);
    for (unsigned k = 0; k < nvars_; ++k) {
      if (rl.exps[k] < dl.exps[k]) fail(err::not_divisible, "leading monomial not divisible");
      e[k] = rl.exps[k] - dl.exps[k];
    }
    Scalar c = rl.coeff.div_exact(dl.coeff);  // NotDivisible over Z when inexact
    GradedPoly piece = monomial(ring_, nvars_, std::move(e), c);
    q += piece;
    rem = rem - piece * d;
  }
  return q;
}

bool GradedPoly::coeffs_divisible_by(const Scalar& c) const {
  for (const Term& t : terms_)
    if (!t.coeff.divisible_by(c)) return false;
  return true;
}

GradedPoly GradedPoly::coeffs_div_exact(const Scalar& c) const {
  GradedPoly r(ring_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back(Term{t.exps, t.coeff.div_exact(c)});
  return r;
}

GradedPoly GradedPoly::homogeneous_component(unsigned i) const {
  GradedPoly r(ring_, nvars_);
  for (const Term& t : terms_)
    if (t.degree() == i) r.terms_.push_back(t);
  return r;
}

std::vector<std::pair<unsigned, GradedPoly>> GradedPoly::grade_decompose() const {
  std::vector<std::pair<unsigned, GradedPoly>> parts;
  for (const Term& t : terms_) {
    unsigned d = t.degree();
    if (parts.empty() || parts.back().first != d)
      parts.emplace_back(d, GradedPoly(ring_, nvars_));
    parts.back().second.terms_.push_back(t);
  }
  return parts;
}

GradedPoly GradedPoly::plus_eval(const Scalar& t) const {
  if (!(t.ring() == ring_)) fail(err::ring_mismatch, "plus_eval point ring differs");
  GradedPoly r(ring_, nvars_);
  for (const Term& term : terms_) {
    Scalar c = term.coeff * t.pow(term.degree());
    if (!c.is_zero()) r.terms_.push_back(Term{term.exps, c});
  }
  return r;
}

GradedPoly GradedPoly::plus_eval(const GradedPoly& t) const {
  if (!t.is_constant()) fail(err::precondition, "plus_eval point must be degree-0");
  return plus_eval(t.constant_term());
}

std::vector<std::string> GradedPoly::var_names(unsigned nv) {
  std::vector<std::string> names;
  if (nv <= 3) {
    const char* alias[] = {"x", "y", "z"};
    for (unsigned i = 0; i < nv; ++i) names.push_back(alias[i]);
  } else {
    for (unsigned i = 1; i <= nv; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  const std::vector<std::string> names = var_names(nvars_);
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Scalar c = t.coeff;
    bool negative = false;
    if (ring_.kind != RingKind::prime_field && sgn(c.value()) < 0) {
      negative = true;
      c = -c;
    }
    if (i == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono;
    for (unsigned k = 0; k < nvars_; ++k) {
      if (t.exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

XPoly XPoly::from_coeffs(std::vector<GradedPoly> cs) {
  internal_check(!cs.empty(), "XPoly::from_coeffs needs at least one coefficient");
  XPoly r(cs[0].ring(), cs[0].num_vars());
  r.coeffs_ = std::move(cs);
  r.trim();
  return r;
}

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GradedPoly XPoly::coeff(unsigned i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return GradedPoly(ring_, nvars_);
}

XPoly XPoly::operator+(const XPoly& o) const {
  XPoly r(ring_, nvars_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), GradedPoly(ring_, nvars_));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.trim();
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  XPoly r(ring_, nvars_);
  if (coeffs_.empty() || o.coeffs_.empty()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, GradedPoly(ring_, nvars_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

bool XPoly::operator==(const XPoly& o) const {
  return ring_ == o.ring_ && nvars_ == o.nvars_ && coeffs_ == o.coeffs_;
}

GradedPoly XPoly::eval_at(const Scalar& t) const {
  GradedPoly r(ring_, nvars_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r += coeffs_[i].scale(t.pow(i));
  return r;
}

XPoly swan_weibel_extend(const GradedPoly& b) {
  XPoly r(b.ring(), b.num_vars());
  if (b.is_zero()) return r;
  std::vector<GradedPoly> cs(unsigned(b.degree()) + 1, b.zero_like());
  for (auto& [d, part] : b.grade_decompose()) cs[d] = part;
  return XPoly::from_coeffs(std::move(cs));
}

}  // namespace grelem
