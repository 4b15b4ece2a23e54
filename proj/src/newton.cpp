#include "polypath/newton.hpp"

#include <algorithm>
#include <cmath>

#include "polypath/errors.hpp"

namespace polypath {

namespace {

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

NewtonOutcome newton_correct(const PolynomialSystem& sys,
                             const std::vector<Complex>& guess, int t_index,
                             Complex t_value, const NewtonOptions& opts) {
  const int nvars = static_cast<int>(sys.variables.size());
  std::vector<int> unknowns;
  for (int j = 0; j < nvars; ++j)
    if (j != t_index) unknowns.push_back(j);
  const std::size_t n = unknowns.size();
  if (sys.polynomials.size() != n)
    throw DimensionMismatch("Newton corrector needs a square system in the unknowns");
  if (guess.size() != n)
    throw DimensionMismatch("guess size does not match unknown count");

  std::vector<Complex> x = guess;
  std::vector<Complex> point(nvars);
  auto fill_point = [&]() {
    for (std::size_t k = 0; k < n; ++k) point[unknowns[k]] = x[k];
    if (t_index >= 0) point[t_index] = t_value;
  };

  NewtonOutcome out;
  double err = 0.0;
  for (int it = 0; it < opts.max_iters; ++it) {
    fill_point();
    std::vector<Complex> f = evaluate(sys, point);
    for (Complex& v : f) v = -v;
    const CMatrix j = jacobian(sys, point, unknowns);
    const std::vector<Complex> dx = lu_solve(j, f);
    for (std::size_t k = 0; k < n; ++k) x[k] += dx[k];
    err = max_abs(dx);
    out.iterations = it + 1;
    if (err <= opts.tol) break;
  }

  fill_point();
  const CMatrix jfinal = jacobian(sys, point, unknowns);
  out.point.t = t_value;
  out.point.coordinates = x;
  out.point.err = err;
  out.point.res = max_abs(evaluate(sys, point));
  out.point.rco = rco_estimate(jfinal);
  out.converged = err <= opts.tol;
  return out;
}

}  // namespace polypath
