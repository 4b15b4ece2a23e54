#include "polypath/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "polypath/errors.hpp"

namespace polypath {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<Complex> operator*(const CMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.cols()) throw DimensionMismatch("matrix-vector size mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double norm1(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

LuDecomposition::LuDecomposition(CMatrix a, double min_pivot) : lu_(std::move(a)) {
  if (lu_.rows() != lu_.cols())
    throw DimensionMismatch("LU factorization requires a square matrix");
  const std::size_t n = lu_.rows();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best < min_pivot) throw SingularMatrix("pivot underflow in LU factorization");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex m = lu_(i, k) / lu_(k, k);
      lu_(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
    }
  }
}

std::vector<Complex> LuDecomposition::solve(std::span<const Complex> b) const {
  const std::size_t n = size();
  if (b.size() != n) throw DimensionMismatch("right-hand side size mismatch");
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
    x[ii] /= lu_(ii, ii);
  }
  return x;
}

std::vector<Complex> LuDecomposition::solve_adjoint(std::span<const Complex> b) const {
  // A = P^T L U, so A^H x = b means U^H L^H (P x) = b.
  const std::size_t n = size();
  if (b.size() != n) throw DimensionMismatch("right-hand side size mismatch");
  std::vector<Complex> w(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) w[i] -= std::conj(lu_(j, i)) * w[j];
    w[i] /= std::conj(lu_(i, i));
  }
  for (std::size_t ii = n; ii-- > 0;)
    for (std::size_t j = ii + 1; j < n; ++j) w[ii] -= std::conj(lu_(j, ii)) * w[j];
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
  return x;
}

std::vector<Complex> lu_solve(const CMatrix& a, std::span<const Complex> b) {
  return LuDecomposition(a).solve(b);
}

double rco_estimate(const CMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;
  const double na = norm1(a);
  if (na == 0.0) return 0.0;
  std::optional<LuDecomposition> lu_opt;
  try {
    lu_opt.emplace(a);
  } catch (const SingularMatrix&) {
    return 0.0;
  }
  const LuDecomposition& lu = *lu_opt;
  // Hager's estimator for ||A^-1||_1.
  std::vector<Complex> x(n, Complex(1.0 / static_cast<double>(n)));
  double est = 0.0;
  std::size_t last_j = n;
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<Complex> y = lu.solve(x);
    double ny = 0.0;
    for (const Complex& v : y) ny += std::abs(v);
    if (iter > 0 && ny <= est) break;
    est = ny;
    std::vector<Complex> xi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(y[i]);
      xi[i] = (m == 0.0) ? Complex(1.0) : y[i] / m;
    }
    std::vector<Complex> z = lu.solve_adjoint(xi);
    std::size_t j = 0;
    double zmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(z[i]);
      if (m > zmax) {
        zmax = m;
        j = i;
      }
    }
    if (j == last_j) break;
    last_j = j;
    std::fill(x.begin(), x.end(), Complex(0.0));
    x[j] = 1.0;
  }
  if (est == 0.0) return 0.0;
  const double rco = 1.0 / (na * est);
  return std::clamp(rco, 0.0, 1.0);
}

}  // namespace polypath
