#ifndef POLYPATH_LINALG_HPP
#define POLYPATH_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polypath {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

std::vector<Complex> operator*(const CMatrix& a, std::span<const Complex> x);

/// 1-norm (maximum absolute column sum).
double norm1(const CMatrix& a);

/// LU factorization with partial pivoting.
/// Throws SingularMatrix when a pivot magnitude falls below min_pivot.
class LuDecomposition {
 public:
  explicit LuDecomposition(CMatrix a, double min_pivot = 1e-300);

  std::size_t size() const { return lu_.rows(); }

  /// Solves A x = b.
  std::vector<Complex> solve(std::span<const Complex> b) const;
  /// Solves A^H x = b with the same factorization.
  std::vector<Complex> solve_adjoint(std::span<const Complex> b) const;

 private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;  // perm_[i] = original row at position i
};

/// One-shot solve of A x = b via LU with partial pivoting.
std::vector<Complex> lu_solve(const CMatrix& a, std::span<const Complex> b);

/// Estimates 1/(||A||_1 * ||A^-1||_1) in [0, 1] with a Hager-style
/// iterative 1-norm estimator on the LU factors.  Returns 0.0 for an
/// exactly singular matrix.
double rco_estimate(const CMatrix& a);

}  // namespace polypath

#endif
