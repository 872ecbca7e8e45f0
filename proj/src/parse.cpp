#include "grelem/parse.hpp"

#include <cctype>

namespace grelem {
namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  CoeffRing ring;
  unsigned nv;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void bad(const std::string& what) {
    fail(err::parse, what + " at position " + std::to_string(pos) + " in '" + s + "'");
  }

  std::string read_digits() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad("expected digits");
    return s.substr(start, pos - start);
  }

  GradedPoly literal() {
    std::string num = read_digits();
    if (eat('/')) {
      std::string den = read_digits();
      return GradedPoly::constant(ring, nv, Scalar::from_string(ring, num + "/" + den));
    }
    return GradedPoly::constant(ring, nv, Scalar::from_string(ring, num));
  }

  GradedPoly variable() {
    char c = s[pos];
    ++pos;
    if (c == 'x' && pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string idx = read_digits();
      unsigned long i = std::stoul(idx);
      if (i < 1 || i > nv) bad("variable x" + idx + " out of range");
      return GradedPoly::variable(ring, nv, unsigned(i));
    }
    if (nv > 3) bad("aliases x, y, z need at most 3 variables; use x1..xk");
    unsigned idx = c == 'x' ? 1 : c == 'y' ? 2 : 3;
    if (idx > nv) bad(std::string("variable ") + c + " out of range");
    return GradedPoly::variable(ring, nv, idx);
  }

  GradedPoly atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      GradedPoly e = expr();
      if (!eat(')')) bad("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (c == 'x' || c == 'y' || c == 'z') return variable();
    bad("expected a literal, variable, or '('");
  }

  GradedPoly factor() {
    GradedPoly a = atom();
    if (eat('^')) {
      std::string e = read_digits();
      unsigned long v = std::stoul(e);
      if (v > 64) bad("exponent too large");
      return a.pow(unsigned(v));
    }
    return a;
  }

  GradedPoly term() {
    GradedPoly f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  GradedPoly expr() {
    bool neg = false;
    if (peek() == '-') {
      eat('-');
      neg = true;
    } else if (peek() == '+') {
      eat('+');
    }
    GradedPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      char c = peek();
      if (c == '+') {
        eat('+');
        acc += term();
      } else if (c == '-') {
        eat('-');
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  GradedPoly parse_all() {
    GradedPoly e = expr();
    skip_ws();
    if (pos != s.size()) bad("trailing input");
    return e;
  }
};

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0, depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (depth == 0) fail(err::parse, "unbalanced ')' in '" + text + "'");
      --depth;
    }
  }
  return parts;
}

}  // namespace

GradedPoly parse_poly(const std::string& text, CoeffRing ring, unsigned num_vars) {
  Parser p{text, 0, ring, num_vars};
  return p.parse_all();
}

MatP parse_matrix_rows(const std::string& text, CoeffRing ring, unsigned num_vars) {
  std::vector<std::vector<GradedPoly>> rows;
  for (const std::string& row : split_on(text, ';')) rows.push_back(parse_vector(row, ring, num_vars));
  if (rows.empty()) fail(err::parse, "empty matrix literal");
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(err::parse, "matrix literal is not square");
  MatP m(unsigned(rows.size()), GradedPoly(ring, num_vars));
  for (unsigned i = 0; i < m.size(); ++i)
    for (unsigned j = 0; j < m.size(); ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

std::vector<GradedPoly> parse_vector(const std::string& text, CoeffRing ring, unsigned num_vars) {
  std::vector<GradedPoly> entries;
  for (const std::string& part : split_on(text, ',')) entries.push_back(parse_poly(part, ring, num_vars));
  return entries;
}

}  // namespace grelem
