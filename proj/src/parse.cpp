#include "polypath/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "polypath/errors.hpp"

namespace polypath {

namespace {

enum class TokKind { number, ident, plus, minus, star, slash, pow, lparen, rparen, semi, end };

struct Token {
  TokKind kind;
  std::string text;
  double value = 0.0;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < n && text[j] == '.') {
        ++j;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      if (j < n && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
          while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
          j = k;
        }
      }
      const std::string lit = text.substr(i, j - i);
      char* endp = nullptr;
      const double v = std::strtod(lit.c_str(), &endp);
      if (endp != lit.c_str() + lit.size())
        throw SyntaxError("malformed numeric literal '" + lit + "'", pos);
      toks.push_back({TokKind::number, lit, v, pos});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      toks.push_back({TokKind::ident, text.substr(i, j - i), 0.0, pos});
      i = j;
      continue;
    }
    switch (c) {
      case '+': toks.push_back({TokKind::plus, "+", 0.0, pos}); break;
      case '-': toks.push_back({TokKind::minus, "-", 0.0, pos}); break;
      case '*':
        if (i + 1 < n && text[i + 1] == '*') {
          toks.push_back({TokKind::pow, "**", 0.0, pos});
          ++i;
        } else {
          toks.push_back({TokKind::star, "*", 0.0, pos});
        }
        break;
      case '/': toks.push_back({TokKind::slash, "/", 0.0, pos}); break;
      case '^': toks.push_back({TokKind::pow, "^", 0.0, pos}); break;
      case '(': toks.push_back({TokKind::lparen, "(", 0.0, pos}); break;
      case ')': toks.push_back({TokKind::rparen, ")", 0.0, pos}); break;
      case ';': toks.push_back({TokKind::semi, ";", 0.0, pos}); break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
    }
    ++i;
  }
  toks.push_back({TokKind::end, "", 0.0, n});
  return toks;
}

Polynomial poly_pow(const Polynomial& base, int e, int nvars) {
  Polynomial r(nvars);
  r.add_term(1.0, std::vector<int>(nvars, 0));
  Polynomial b = base;
  while (e > 0) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
    e >>= 1;
  }
  return r;
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, const std::vector<std::string>& variables,
         bool declared)
      : toks_(toks), variables_(variables), declared_(declared) {}

  std::size_t index() const { return i_; }
  void set_index(std::size_t i) { i_ = i; }
  const Token& peek() const { return toks_[i_]; }

  Polynomial parse_expression() {
    Polynomial value = parse_term();
    while (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
      const bool minus = peek().kind == TokKind::minus;
      ++i_;
      Polynomial rhs = parse_term();
      value = minus ? value + rhs * Complex(-1.0) : value + rhs;
    }
    return value;
  }

  void expect(TokKind kind, const char* what) {
    if (peek().kind != kind)
      throw SyntaxError(std::string("expected ") + what + ", found '" + peek().text + "'",
                        peek().pos);
    ++i_;
  }

 private:
  int nvars() const { return static_cast<int>(variables_.size()); }

  Polynomial parse_term() {
    Polynomial value = parse_factor();
    while (peek().kind == TokKind::star || peek().kind == TokKind::slash) {
      const bool divide = peek().kind == TokKind::slash;
      const std::size_t oppos = peek().pos;
      ++i_;
      Polynomial rhs = parse_factor();
      if (divide) {
        // Division is restricted to constant divisors (rational literals).
        const Complex c = constant_value(rhs, oppos);
        if (c == Complex(0.0)) throw SyntaxError("division by zero", oppos);
        value = value * (Complex(1.0) / c);
      } else {
        value = value * rhs;
      }
    }
    return value;
  }

  Complex constant_value(const Polynomial& p, std::size_t pos) const {
    if (p.is_zero()) return 0.0;
    if (p.monomials().size() == 1 && p.monomials()[0].total_degree() == 0)
      return p.monomials()[0].coefficient;
    throw SyntaxError("division by a non-constant expression", pos);
  }

  Polynomial parse_factor() {
    if (peek().kind == TokKind::plus) {
      ++i_;
      return parse_factor();
    }
    if (peek().kind == TokKind::minus) {
      ++i_;
      return parse_factor() * Complex(-1.0);
    }
    Polynomial base = parse_primary();
    if (peek().kind == TokKind::pow) {
      ++i_;
      base = poly_pow(base, parse_exponent(), nvars());
    }
    return base;
  }

  int parse_exponent() {
    const Token& tok = peek();
    if (tok.kind == TokKind::minus)
      throw ExponentError("negative exponent at position " + std::to_string(tok.pos));
    if (tok.kind != TokKind::number)
      throw SyntaxError("expected exponent, found '" + tok.text + "'", tok.pos);
    for (char c : tok.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ExponentError("non-integer exponent '" + tok.text + "' at position " +
                            std::to_string(tok.pos));
    ++i_;
    return static_cast<int>(tok.value);
  }

  Polynomial parse_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokKind::number: {
        ++i_;
        Polynomial p(nvars());
        p.add_term(tok.value, std::vector<int>(nvars(), 0));
        return p;
      }
      case TokKind::ident: {
        ++i_;
        Polynomial p(nvars());
        auto it = std::find(variables_.begin(), variables_.end(), tok.text);
        if (it != variables_.end()) {
          std::vector<int> exps(nvars(), 0);
          exps[it - variables_.begin()] = 1;
          p.add_term(1.0, std::move(exps));
        } else if (tok.text == "I" || tok.text == "i") {
          p.add_term(Complex(0.0, 1.0), std::vector<int>(nvars(), 0));
        } else {
          throw UndeclaredVariable("undeclared variable '" + tok.text + "' at position " +
                                   std::to_string(tok.pos));
        }
        return p;
      }
      case TokKind::lparen: {
        ++i_;
        Polynomial inner = parse_expression();
        expect(TokKind::rparen, "')'");
        return inner;
      }
      default:
        throw SyntaxError("expected a number, variable or '(', found '" + tok.text + "'",
                          tok.pos);
    }
  }

  const std::vector<Token>& toks_;
  const std::vector<std::string>& variables_;
  bool declared_;
  std::size_t i_ = 0;
};

std::vector<std::string> collect_variables(const std::vector<Token>& toks,
                                           const SystemSource& src) {
  if (src.declared_variables) {
    for (const Token& t : toks) {
      if (t.kind != TokKind::ident) continue;
      const auto& vars = *src.declared_variables;
      if (std::find(vars.begin(), vars.end(), t.text) != vars.end()) continue;
      if (t.text == "I" || t.text == "i") continue;
      throw UndeclaredVariable("undeclared variable '" + t.text + "' at position " +
                               std::to_string(t.pos));
    }
    return *src.declared_variables;
  }
  std::vector<std::string> vars;
  for (const Token& t : toks) {
    if (t.kind != TokKind::ident) continue;
    if (t.text == "I" || t.text == "i") continue;
    if (std::find(vars.begin(), vars.end(), t.text) == vars.end()) vars.push_back(t.text);
  }
  return vars;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PolynomialSystem parse_system(const SystemSource& src) {
  if (src.text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw SyntaxError("empty system source", 0);
  const std::vector<Token> toks = tokenize(src.text);
  PolynomialSystem sys;
  sys.variables = collect_variables(toks, src);
  Parser parser(toks, sys.variables, src.declared_variables.has_value());
  while (parser.peek().kind != TokKind::end) {
    sys.polynomials.push_back(parser.parse_expression());
    parser.expect(TokKind::semi, "';'");
  }
  if (sys.polynomials.empty()) throw SyntaxError("no polynomials in system source", 0);
  return sys;
}

PolynomialSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open system file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  // Optional header line: the polynomial count, optionally followed by a
  // second integer for the variable count.
  std::size_t eol = text.find('\n');
  long count = -1;
  if (eol != std::string::npos) {
    std::istringstream head(text.substr(0, eol));
    long a = 0, b = 0;
    if (head >> a && a > 0) {
      std::string rest;
      if (!(head >> b)) b = -1;
      if (!(head >> rest)) {
        count = a;
        text = text.substr(eol + 1);
      }
    }
  }

  PolynomialSystem sys = parse_system({text, std::nullopt});
  if (count >= 0 && count != static_cast<long>(sys.polynomials.size()))
    throw SyntaxError("header count " + std::to_string(count) + " does not match " +
                          std::to_string(sys.polynomials.size()) + " polynomials",
                      0);
  return sys;
}

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  std::string t = text;
  PolynomialSystem sys = parse_system({t.find(';') == std::string::npos ? t + ";" : t,
                                       variables});
  if (sys.polynomials.size() != 1)
    throw SyntaxError("expected a single polynomial", 0);
  return sys.polynomials[0];
}

Complex parse_complex(const std::string& text) {
  const Polynomial p = parse_polynomial(text, {});
  if (p.is_zero()) return 0.0;
  return p.monomials()[0].coefficient;
}

std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variables) {
  if (p.is_zero()) return "0";
  std::string out;
  // Highest total degree first reads naturally: "x^2 - 1".
  const auto& mons = p.monomials();
  for (std::size_t k = mons.size(); k-- > 0;) {
    const Monomial& m = mons[k];
    std::string monstr;
    for (std::size_t j = 0; j < variables.size(); ++j) {
      const int e = m.exponents[j];
      if (e == 0) continue;
      if (!monstr.empty()) monstr += "*";
      monstr += variables[j];
      if (e > 1) monstr += "^" + std::to_string(e);
    }
    const Complex c = m.coefficient;
    std::string coeffstr;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0.0;
      const double a = std::abs(c.real());
      if (!(a == 1.0 && !monstr.empty())) coeffstr = fmt_double(a);
    } else if (c.real() == 0.0) {
      negative = c.imag() < 0.0;
      const double a = std::abs(c.imag());
      coeffstr = (a == 1.0) ? "I" : fmt_double(a) + "*I";
    } else {
      const double im = c.imag();
      coeffstr = "(" + fmt_double(c.real()) + (im < 0.0 ? " - " : " + ") +
                 fmt_double(std::abs(im)) + "*I)";
    }
    std::string term = coeffstr;
    if (!monstr.empty()) {
      if (!term.empty() && term != "I") term += "*";
      if (term == "I") term += "*";
      term += monstr;
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string format_system(const PolynomialSystem& sys) {
  std::string out = std::to_string(sys.polynomials.size()) + "\n";
  for (const Polynomial& p : sys.polynomials)
    out += format_polynomial(p, sys.variables) + ";\n";
  return out;
}

}  // namespace polypath
