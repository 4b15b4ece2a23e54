#include "polypath/series.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "polypath/errors.hpp"

namespace polypath {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw DimensionMismatch("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(Complex value, int degree) {
  std::vector<Complex> c(degree + 1, Complex(0.0));
  c[0] = value;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(int degree) const {
  std::vector<Complex> c(coefficients_.begin(),
                         coefficients_.begin() + std::min<std::size_t>(
                                                     degree + 1, coefficients_.size()));
  c.resize(degree + 1, Complex(0.0));
  return TruncatedSeries(std::move(c));
}

namespace {

int shared_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.degree(), b.degree());
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int d = shared_degree(a, b);
  std::vector<Complex> c(d + 1);
  for (int n = 0; n <= d; ++n) c[n] = a[n] + b[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int d = shared_degree(a, b);
  std::vector<Complex> c(d + 1);
  for (int n = 0; n <= d; ++n) c[n] = a[n] - b[n];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int d = shared_degree(a, b);
  std::vector<Complex> c(d + 1, Complex(0.0));
  for (int i = 0; i <= d; ++i) {
    if (a[i] == Complex(0.0)) continue;
    for (int j = 0; j + i <= d; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == Complex(0.0))
    throw DivisionByZeroSeries("series division by a series with zero constant term");
  const int d = shared_degree(a, b);
  std::vector<Complex> c(d + 1);
  for (int n = 0; n <= d; ++n) {
    Complex s = a[n];
    for (int j = 1; j <= n; ++j)
      if (j <= b.degree()) s -= b[j] * c[n - j];
    c[n] = s / b[0];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return series_add(a, b);
    case SeriesOp::sub: return series_sub(a, b);
    case SeriesOp::mul: return series_mul(a, b);
    case SeriesOp::div: return series_div(a, b);
  }
  throw Error("unknown series operation");
}

TruncatedSeries evaluate_series(const Polynomial& p,
                                const std::vector<TruncatedSeries>& vars,
                                int degree) {
  if (static_cast<int>(vars.size()) != p.num_variables())
    throw DimensionMismatch("series substitution needs one series per variable");
  TruncatedSeries sum = TruncatedSeries::constant(0.0, degree);
  for (const Monomial& m : p.monomials()) {
    TruncatedSeries term = TruncatedSeries::constant(m.coefficient, degree);
    for (int j = 0; j < p.num_variables(); ++j) {
      const TruncatedSeries base = vars[j].truncated(degree);
      for (int e = 0; e < m.exponents[j]; ++e) term = series_mul(term, base);
    }
    sum = series_add(sum, term);
  }
  return sum;
}

SeriesVector series_newton_at_point(const PolynomialSystem& sys,
                                    const SolutionPoint& start, int idx,
                                    int maxdeg, int nit) {
  const int nvars = static_cast<int>(sys.variables.size());
  const std::size_t n = sys.polynomials.size();
  if (nvars != static_cast<int>(n) + 1)
    throw DimensionMismatch("series Newton needs n polynomials in n+1 variables");
  if (idx < 0 || idx >= nvars)
    throw DimensionMismatch("series parameter index out of range");
  if (start.coordinates.size() != n)
    throw DimensionMismatch("start point size does not match unknown count");

  std::vector<int> unknowns;
  for (int j = 0; j < nvars; ++j)
    if (j != idx) unknowns.push_back(j);

  // Formal Jacobian with respect to the unknowns.
  std::vector<std::vector<Polynomial>> jac(n);
  for (std::size_t i = 0; i < n; ++i)
    for (int u : unknowns) jac[i].push_back(sys.polynomials[i].differentiate(u));

  std::vector<std::vector<Complex>> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = {start.coordinates[k]};

  for (int it = 1; it <= nit; ++it) {
    const int d = std::min(1 << it, maxdeg);

    std::vector<TruncatedSeries> vars;
    vars.reserve(nvars);
    std::size_t k = 0;
    for (int j = 0; j < nvars; ++j) {
      if (j == idx) {
        // t = center + s
        std::vector<Complex> c(d + 1, Complex(0.0));
        c[0] = start.t;
        if (d >= 1) c[1] = 1.0;
        vars.emplace_back(std::move(c));
      } else {
        std::vector<Complex> c = x[k++];
        c.resize(d + 1, Complex(0.0));
        vars.emplace_back(std::move(c));
      }
    }

    std::vector<TruncatedSeries> f;
    f.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      f.push_back(evaluate_series(sys.polynomials[i], vars, d));
    std::vector<std::vector<TruncatedSeries>> js(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m)
        js[i].push_back(evaluate_series(jac[i][m], vars, d));

    CMatrix j0(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) j0(i, m) = js[i][m][0];
    std::unique_ptr<LuDecomposition> lu;
    try {
      lu = std::make_unique<LuDecomposition>(j0);
    } catch (const SingularMatrix&) {
      throw SingularJacobian("order-0 Jacobian is singular at the expansion point");
    }

    // Solve J(s) dx(s) = -F(s) order by order with the order-0 factors.
    std::vector<std::vector<Complex>> dx(n, std::vector<Complex>(d + 1));
    std::vector<Complex> rhs(n);
    for (int order = 0; order <= d; ++order) {
      for (std::size_t i = 0; i < n; ++i) {
        Complex s = -f[i][order];
        for (int q = 1; q <= order; ++q)
          for (std::size_t m = 0; m < n; ++m) s -= js[i][m][q] * dx[m][order - q];
        rhs[i] = s;
      }
      const std::vector<Complex> sol = lu->solve(rhs);
      for (std::size_t m = 0; m < n; ++m) dx[m][order] = sol[m];
    }

    for (std::size_t k2 = 0; k2 < n; ++k2) {
      x[k2].resize(d + 1, Complex(0.0));
      for (int order = 0; order <= d; ++order) x[k2][order] += dx[k2][order];
    }
  }

  SeriesVector result;
  for (std::size_t k2 = 0; k2 < n; ++k2) {
    x[k2].resize(maxdeg + 1, Complex(0.0));
    result.components.emplace_back(std::move(x[k2]));
  }
  return result;
}

PoleEstimate fabry_ratio(const TruncatedSeries& s) {
  const int d = s.degree();
  if (d < 2) throw DimensionMismatch("Fabry ratio needs degree >= 2");
  if (s[d] == Complex(0.0))
    throw ZeroLeadingCoefficient("Fabry ratio undefined: leading coefficient is zero");
  const Complex loc = s[d - 1] / s[d];
  return PoleEstimate{loc, std::abs(loc)};
}

}  // namespace polypath
