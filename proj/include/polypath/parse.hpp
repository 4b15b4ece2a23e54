#ifndef POLYPATH_PARSE_HPP
#define POLYPATH_PARSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "polypath/polynomial.hpp"

namespace polypath {

/// Source text for a polynomial system: one or more ';'-terminated
/// polynomials.  When declared_variables is given it fixes the variable
/// order and every identifier in the text must appear in it (or be the
/// imaginary unit I/i); otherwise variables are ordered by first
/// appearance.
struct SystemSource {
  std::string text;
  std::optional<std::vector<std::string>> declared_variables;
};

/// Parses ';'-terminated polynomial expressions into monomial form.
///
/// Supported syntax: integer and decimal literals, rational literals such
/// as (4/5), the imaginary unit I or i, identifiers [a-zA-Z][a-zA-Z0-9_]*,
/// the operators + - * and exponentiation as '^' or '**' with nonnegative
/// integer exponents, parenthesized subexpressions, and division by
/// constant subexpressions.  Products are expanded.
PolynomialSystem parse_system(const SystemSource& src);

/// Reads a system file: optional first line with the polynomial count,
/// then ';'-terminated polynomials.  Whitespace-insensitive.
PolynomialSystem parse_system_file(const std::string& path);

/// Parses a single polynomial against a fixed variable list.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

/// Evaluates a constant expression, e.g. "-0.917 - 0.398*I" or "(4/5)".
Complex parse_complex(const std::string& text);

/// Formats a polynomial so that parsing the output reproduces the same
/// monomial set with bit-identical double coefficients.
std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variables);

std::string format_system(const PolynomialSystem& sys);

}  // namespace polypath

#endif
