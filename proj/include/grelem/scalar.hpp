#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "grelem/error.hpp"

namespace grelem {

enum class RingKind { integers, rationals, prime_field };

// Coefficient ring descriptor: Z, Q, or F_p with p prime. Every value in the
// library carries one of these; mixing descriptors is a structural error.
struct CoeffRing {
  RingKind kind = RingKind::integers;
  std::uint64_t p = 0;  // modulus, prime_field only

  static CoeffRing integers() { return {RingKind::integers, 0}; }
  static CoeffRing rationals() { return {RingKind::rationals, 0}; }
  static CoeffRing prime_field(std::uint64_t p);  // rejects composite moduli

  bool operator==(const CoeffRing&) const = default;
  bool is_field() const { return kind != RingKind::integers; }
  std::uint64_t characteristic() const { return kind == RingKind::prime_field ? p : 0; }

  std::string name() const;                        // "int" | "rat" | "fp:<p>"
  static CoeffRing parse(const std::string& txt);  // inverse of name()
};

// One exact coefficient. Invariants: integers and F_p values have denominator
// 1; F_p values are canonical residues in [0, p); rationals stay reduced with
// positive denominator (mpq canonical form).
class Scalar {
public:
  Scalar() : ring_(CoeffRing::integers()), v_(0) {}
  Scalar(CoeffRing ring, mpq_class v) : ring_(ring), v_(std::move(v)) { normalize(); }

  static Scalar zero(CoeffRing r) { return Scalar(r, 0); }
  static Scalar one(CoeffRing r) { return Scalar(r, 1); }
  static Scalar of(CoeffRing r, long value) { return Scalar(r, mpq_class(value)); }
  // Parses "n" or "n/d" in decimal. Over Z the quotient must be exact; over
  // F_p the denominator is inverted.
  static Scalar from_string(CoeffRing r, const std::string& txt);

  const CoeffRing& ring() const { return ring_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_unit() const;
  bool is_integral() const { return v_.get_den() == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;  // NotAUnit when no inverse exists
  // Exact quotient; NotDivisible over Z when d does not divide *this.
  Scalar div_exact(const Scalar& d) const;
  // True when d divides *this (always true for nonzero d over a field).
  bool divisible_by(const Scalar& d) const;
  Scalar pow(unsigned long e) const;

  // Largest j <= cap with s^j dividing *this; integer ring only, |s| >= 2.
  unsigned valuation(const Scalar& s, unsigned cap) const;

  std::string to_string() const;  // decimal, "a/b" for non-integral rationals

private:
  void normalize();
  void check_same_ring(const Scalar& o) const;

  CoeffRing ring_;
  mpq_class v_;
};

}  // namespace grelem
