#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grelem {

// All recoverable failures (bad input, violated preconditions, impossible
// requests) are reported as Error. kind() is a stable machine-readable tag the
// CLI surfaces next to the message; it never depends on locale or formatting.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const char* kind, const std::string& msg) {
  throw Error(kind, msg);
}

namespace err {
inline constexpr const char* ring_mismatch = "RingMismatch";
inline constexpr const char* structural = "Structural";
inline constexpr const char* parse = "Parse";
inline constexpr const char* not_invertible = "NotInvertible";
inline constexpr const char* not_a_unit = "NotAUnit";
inline constexpr const char* not_divisible = "NotDivisible";
inline constexpr const char* precondition = "Precondition";
inline constexpr const char* orthogonality = "OrthogonalityViolation";
inline constexpr const char* not_level = "NotInCongruenceSubgroup";
inline constexpr const char* not_unimodular = "NotUnimodular";
inline constexpr const char* not_comaximal = "NotComaximal";
inline constexpr const char* denominator = "DenominatorNotCleared";
inline constexpr const char* bad_local_data = "BadLocalData";
inline constexpr const char* unsupported_ring = "UnsupportedRing";
}  // namespace err

// Violations of identities the library itself guarantees. Reaching one is a
// bug, not a user error, so it deliberately does not carry an Error kind.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace grelem
