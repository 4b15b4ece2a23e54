#ifndef POLYPATH_POLYNOMIAL_HPP
#define POLYPATH_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include "polypath/linalg.hpp"

namespace polypath {

/// One term of a multivariate polynomial: coefficient times a product of
/// variable powers.  The exponent vector length equals the variable count
/// of the owning system.
struct Monomial {
  Complex coefficient;
  std::vector<int> exponents;

  int total_degree() const;
};

/// Sparse multivariate polynomial over complex doubles.  Monomials are kept
/// in graded lexicographic order with distinct exponent vectors and no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int num_variables) : num_variables_(num_variables) {}

  int num_variables() const { return num_variables_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  /// Adds coeff * x^exps, merging with an existing term if present.
  void add_term(const Complex& coeff, std::vector<int> exponents);

  Complex evaluate(std::span<const Complex> point) const;
  Polynomial differentiate(int variable) const;

  /// Widens the exponent vectors to a larger variable count (new variables
  /// get exponent zero).
  Polynomial extended(int num_variables) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Complex& scalar) const;

  bool same_monomials(const Polynomial& other) const;

 private:
  int num_variables_ = 0;
  std::vector<Monomial> monomials_;
};

struct PolynomialSystem {
  std::vector<Polynomial> polynomials;
  std::vector<std::string> variables;
};

std::vector<Complex> evaluate(const PolynomialSystem& sys,
                              std::span<const Complex> point);

/// Jacobian of the system with respect to the selected variable indices,
/// entry (i, j) = d(polynomial i)/d(variables[unknowns[j]]) at point.
CMatrix jacobian(const PolynomialSystem& sys, std::span<const Complex> point,
                 std::span<const int> unknowns);

}  // namespace polypath

#endif
