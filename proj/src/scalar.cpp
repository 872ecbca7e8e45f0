#include "grelem/scalar.hpp"

#include <cctype>

namespace grelem {

CoeffRing CoeffRing::prime_field(std::uint64_t p) {
  mpz_class m(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    fail(err::parse, "modulus " + std::to_string(p) + " is not prime");
  return {RingKind::prime_field, p};
}

std::string CoeffRing::name() const {
  switch (kind) {
    case RingKind::integers: return "int";
    case RingKind::rationals: return "rat";
    case RingKind::prime_field: return "fp:" + std::to_string(p);
  }
  return "?";
}

CoeffRing CoeffRing::parse(const std::string& txt) {
  if (txt == "int") return integers();
  if (txt == "rat") return rationals();
  if (txt.rfind("fp:", 0) == 0) {
    const std::string digits = txt.substr(3);
    if (digits.empty()) fail(err::parse, "missing modulus in ring name '" + txt + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(err::parse, "bad modulus in ring name '" + txt + "'");
    mpz_class m(digits);
    if (!m.fits_ulong_p()) fail(err::parse, "modulus out of range in '" + txt + "'");
    return prime_field(m.get_ui());
  }
  fail(err::parse, "unknown ring name '" + txt + "' (expected int, rat, or fp:<p>)");
}

void Scalar::normalize() {
  v_.canonicalize();
  if (ring_.kind == RingKind::prime_field) {
    internal_check(v_.get_den() == 1, "prime-field scalar with denominator");
    mpz_class p(static_cast<unsigned long>(ring_.p));
    mpz_class r = v_.get_num() % p;
    if (sgn(r) < 0) r += p;
    v_ = mpq_class(r);
  } else if (ring_.kind == RingKind::integers) {
    if (v_.get_den() != 1) fail(err::not_divisible, "non-integral value over int ring");
  }
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    fail(err::ring_mismatch, "scalar rings differ: " + ring_.name() + " vs " + o.ring_.name());
}

Scalar Scalar::from_string(CoeffRing r, const std::string& txt) {
  if (txt.empty()) fail(err::parse, "empty coefficient string");
  std::size_t slash = txt.find('/');
  try {
    if (slash == std::string::npos) return Scalar(r, mpq_class(mpz_class(txt)));
    mpz_class num(txt.substr(0, slash)), den(txt.substr(slash + 1));
    if (sgn(den) == 0) fail(err::parse, "zero denominator in '" + txt + "'");
    if (r.kind == RingKind::prime_field)
      return Scalar(r, mpq_class(num)) * Scalar(r, mpq_class(den)).inverse();
    mpq_class q(num, den);
    return Scalar(r, q);
  } catch (const std::invalid_argument&) {
    fail(err::parse, "bad coefficient literal '" + txt + "'");
  }
}

bool Scalar::is_unit() const {
  if (is_zero()) return false;
  if (ring_.kind == RingKind::integers) return v_ == 1 || v_ == -1;
  return true;
}

Scalar Scalar::operator-() const { return Scalar(ring_, mpq_class(-v_)); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_ring(o);
  return Scalar(ring_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_ring(o);
  return Scalar(ring_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_ring(o);
  return Scalar(ring_, v_ * o.v_);
}

bool Scalar::operator==(const Scalar& o) const { return ring_ == o.ring_ && v_ == o.v_; }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(err::not_a_unit, "zero has no inverse");
  switch (ring_.kind) {
    case RingKind::rationals: return Scalar(ring_, 1 / v_);
    case RingKind::prime_field: {
      mpz_class p(static_cast<unsigned long>(ring_.p)), inv;
      internal_check(mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) != 0,
                     "nonzero residue must be invertible mod p");
      return Scalar(ring_, mpq_class(inv));
    }
    case RingKind::integers:
      if (v_ == 1 || v_ == -1) return *this;
      fail(err::not_a_unit, to_string() + " is not a unit of int");
  }
  fail(err::structural, "bad ring kind");
}

bool Scalar::divisible_by(const Scalar& d) const {
  check_same_ring(d);
  if (d.is_zero()) return is_zero();
  if (ring_.kind != RingKind::integers) return true;
  return mpz_divisible_p(v_.get_num().get_mpz_t(), d.v_.get_num().get_mpz_t()) != 0;
}

Scalar Scalar::div_exact(const Scalar& d) const {
  check_same_ring(d);
  if (d.is_zero()) fail(err::not_divisible, "division by zero");
  if (ring_.kind == RingKind::integers) {
    if (!divisible_by(d)) fail(err::not_divisible, d.to_string() + " does not divide " + to_string());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v_.get_num().get_mpz_t(), d.v_.get_num().get_mpz_t());
    return Scalar(ring_, mpq_class(q));
  }
  return *this * d.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = one(ring_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

unsigned Scalar::valuation(const Scalar& s, unsigned cap) const {
  check_same_ring(s);
  internal_check(ring_.kind == RingKind::integers, "valuation is an integer-ring notion");
  internal_check(!s.is_zero() && !s.is_unit(), "valuation base must be a non-unit");
  if (is_zero()) return cap;
  unsigned v = 0;
  Scalar rest = *this;
  while (v < cap && rest.divisible_by(s)) {
    rest = rest.div_exact(s);
    ++v;
  }
  return v;
}

std::string Scalar::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace grelem
