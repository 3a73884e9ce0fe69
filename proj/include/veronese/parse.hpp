#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "veronese/poly.hpp"

namespace veronese {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variable family of the text grammar: `x0..x3`, `a0..a2`, `y0..y6`, or the
/// single pencil parameter `t`.
struct VarFamily {
  char letter = 'x';
  int count = 4;

  static VarFamily source() { return {'x', 4}; }
  static VarFamily plane() { return {'a', 3}; }
  static VarFamily target() { return {'y', 7}; }
  static VarFamily pencil() { return {'t', 1}; }
  std::string name(int i) const;
};

namespace detail {

struct RawTerm {
  bool negative = false;
  std::vector<std::string> integers;  // factors multiplied into the coefficient
  Exponent exponent{};
};

std::vector<RawTerm> parse_terms(std::string_view text, const VarFamily& family);

}  // namespace detail

/// Parses `3*x0^2*x1 - x2^3` style text. Throws ParseError.
template <class Field>
Poly<Field> parse_poly(const Field& field, std::string_view text, const VarFamily& family = VarFamily::source()) {
  Poly<Field> f(field, family.count);
  for (const auto& term : detail::parse_terms(text, family)) {
    auto c = field.one();
    for (const auto& digits : term.integers) c = c * field.from_string(digits);
    if (term.negative) c = -c;
    f.add_term(term.exponent, c);
  }
  return f;
}

/// Inverse of parse_poly (prime-field residues printed in (-p/2, p/2]).
template <class Field>
std::string format_poly(const Poly<Field>& f, const VarFamily& family = VarFamily::source()) {
  std::string out;
  // Highest degree first reads more naturally.
  for (int d = f.degree(); d >= 0; --d) {
    const auto part = f.component(d);
    const auto basis = monomial_basis(f.nvars(), d);
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (is_zero(part[k])) continue;
      std::string coef;
      bool negative = false;
      if constexpr (Field::is_prime_field) {
        auto v = f.field().signed_value(part[k]);
        negative = v < 0;
        coef = std::to_string(negative ? -v : v);
      } else {
        negative = sgn(part[k]) < 0;
        coef = mpq_class(abs(part[k])).get_str();
      }
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string mono;
      for (int i = 0; i < f.nvars(); ++i) {
        if (basis[k][i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += family.name(i);
        if (basis[k][i] > 1) mono += "^" + std::to_string(basis[k][i]);
      }
      if (mono.empty()) out += coef;
      else if (coef == "1") out += mono;
      else out += coef + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

/// Non-blank lines of a text file with `#` comments removed.
std::vector<std::string> read_content_lines(const std::filesystem::path& path);

}  // namespace veronese
