#pragma once

#include <functional>
#include <string>

#include "grelem/parse.hpp"

// Shorthand used across the test files: parse a polynomial over ZZ[x,y]
// unless another ring/variable count is given.
inline grelem::GradedPoly P(const std::string& text,
                            grelem::CoeffRing ring = grelem::CoeffRing::integers(),
                            unsigned nv = 2) {
  return grelem::parse_poly(text, ring, nv);
}

inline grelem::MatP M(const std::string& rows,
                      grelem::CoeffRing ring = grelem::CoeffRing::integers(),
                      unsigned nv = 2) {
  return grelem::parse_matrix_rows(rows, ring, nv);
}

// Runs f and reports the thrown Error kind, or "" when nothing was thrown.
inline std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const grelem::Error& e) {
    return e.kind();
  }
  return "";
}
