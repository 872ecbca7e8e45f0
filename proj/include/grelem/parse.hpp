#pragma once

#include <string>
#include <vector>

#include "grelem/matrix.hpp"

namespace grelem {

// Text grammar: integer and rational literals, variables x1..xk (aliases
// x, y, z when k <= 3), operators + - * ^, parentheses. Exponents are
// nonnegative integer literals. Over Z a rational literal must reduce to an
// integer; over F_p the denominator is inverted.
GradedPoly parse_poly(const std::string& text, CoeffRing ring, unsigned num_vars);

// Rows separated by ';', entries by ','. Must be square.
MatP parse_matrix_rows(const std::string& text, CoeffRing ring, unsigned num_vars);

// Comma-separated entries.
std::vector<GradedPoly> parse_vector(const std::string& text, CoeffRing ring, unsigned num_vars);

}  // namespace grelem
