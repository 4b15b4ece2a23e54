#include "polypath/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "polypath/errors.hpp"

namespace polypath {

namespace {

// Graded lexicographic order on exponent vectors.
bool grlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Complex int_pow(const Complex& base, int e) {
  Complex r = 1.0;
  Complex b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

int Monomial::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

void Polynomial::add_term(const Complex& coeff, std::vector<int> exponents) {
  if (static_cast<int>(exponents.size()) != num_variables_)
    throw DimensionMismatch("monomial exponent count does not match variable count");
  auto it = std::lower_bound(
      monomials_.begin(), monomials_.end(), exponents,
      [](const Monomial& m, const std::vector<int>& e) { return grlex_less(m.exponents, e); });
  if (it != monomials_.end() && it->exponents == exponents) {
    it->coefficient += coeff;
    if (it->coefficient == Complex(0.0)) monomials_.erase(it);
    return;
  }
  if (coeff == Complex(0.0)) return;
  monomials_.insert(it, Monomial{coeff, std::move(exponents)});
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  if (static_cast<int>(point.size()) != num_variables_)
    throw DimensionMismatch("evaluation point size does not match variable count");
  Complex sum = 0.0;
  for (const Monomial& m : monomials_) {
    Complex term = m.coefficient;
    for (int j = 0; j < num_variables_; ++j)
      if (m.exponents[j] != 0) term *= int_pow(point[j], m.exponents[j]);
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::differentiate(int variable) const {
  Polynomial d(num_variables_);
  for (const Monomial& m : monomials_) {
    const int e = m.exponents[variable];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents;
    exps[variable] = e - 1;
    d.add_term(m.coefficient * static_cast<double>(e), std::move(exps));
  }
  return d;
}

Polynomial Polynomial::extended(int num_variables) const {
  Polynomial p(num_variables);
  for (const Monomial& m : monomials_) {
    std::vector<int> exps = m.exponents;
    exps.resize(num_variables, 0);
    p.add_term(m.coefficient, std::move(exps));
  }
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  for (const Monomial& m : other.monomials_) r.add_term(m.coefficient, m.exponents);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r(num_variables_);
  for (const Monomial& a : monomials_) {
    for (const Monomial& b : other.monomials_) {
      std::vector<int> exps(num_variables_);
      for (int j = 0; j < num_variables_; ++j) exps[j] = a.exponents[j] + b.exponents[j];
      r.add_term(a.coefficient * b.coefficient, std::move(exps));
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Complex& scalar) const {
  Polynomial r(num_variables_);
  for (const Monomial& m : monomials_) r.add_term(m.coefficient * scalar, m.exponents);
  return r;
}

bool Polynomial::same_monomials(const Polynomial& other) const {
  if (monomials_.size() != other.monomials_.size()) return false;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (monomials_[i].exponents != other.monomials_[i].exponents) return false;
    if (monomials_[i].coefficient != other.monomials_[i].coefficient) return false;
  }
  return true;
}

std::vector<Complex> evaluate(const PolynomialSystem& sys,
                              std::span<const Complex> point) {
  std::vector<Complex> values(sys.polynomials.size());
  for (std::size_t i = 0; i < sys.polynomials.size(); ++i)
    values[i] = sys.polynomials[i].evaluate(point);
  return values;
}

CMatrix jacobian(const PolynomialSystem& sys, std::span<const Complex> point,
                 std::span<const int> unknowns) {
  for (int u : unknowns)
    if (u < 0 || u >= static_cast<int>(sys.variables.size()))
      throw DimensionMismatch("unknown index out of range");
  CMatrix j(sys.polynomials.size(), unknowns.size());
  for (std::size_t i = 0; i < sys.polynomials.size(); ++i)
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      j(i, k) = sys.polynomials[i].differentiate(unknowns[k]).evaluate(point);
  return j;
}

}  // namespace polypath
