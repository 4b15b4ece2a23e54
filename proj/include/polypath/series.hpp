#ifndef POLYPATH_SERIES_HPP
#define POLYPATH_SERIES_HPP

#include <vector>

#include "polypath/polynomial.hpp"
#include "polypath/solution.hpp"

namespace polypath {

/// Truncated Taylor series c_0 + c_1 t + ... + c_d t^d.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coefficients);
  static TruncatedSeries constant(Complex value, int degree);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coefficients_; }
  Complex operator[](int n) const { return coefficients_[n]; }

  TruncatedSeries truncated(int degree) const;

 private:
  std::vector<Complex> coefficients_;
};

enum class SeriesOp { add, sub, mul, div };

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated to the shorter operand's degree.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Recursive coefficient elimination; throws DivisionByZeroSeries when
/// b.c_0 = 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b,
                             SeriesOp op);

/// Per-unknown series sharing one truncation degree.
struct SeriesVector {
  std::vector<TruncatedSeries> components;

  int degree() const {
    return components.empty() ? -1 : components.front().degree();
  }
};

/// Distance estimate to the nearest singularity: location is relative to
/// the expansion center unless the caller offsets it, modulus is its
/// absolute value.
struct PoleEstimate {
  Complex location{0.0, 0.0};
  double modulus = 0.0;
};

/// Substitutes series for each variable and expands, truncating at degree.
TruncatedSeries evaluate_series(const Polynomial& p,
                                const std::vector<TruncatedSeries>& vars,
                                int degree);

/// Power-series Newton around a regular path point.  The system must have
/// n polynomials in n+1 variables; variable idx is the series parameter,
/// expanded around start.t (so the returned series are in the local shift
/// s, t = start.t + s).  Each iteration doubles the working degree, capped
/// at maxdeg; after nit iterations the residual is O(s^min(2^nit, maxdeg+1)).
SeriesVector series_newton_at_point(const PolynomialSystem& sys,
                                    const SolutionPoint& start, int idx,
                                    int maxdeg, int nit);

/// Fabry ratio c_{d-1}/c_d of the trailing coefficients: the estimated
/// location (relative to the expansion center) of the nearest singularity,
/// and hence the radius of convergence.  Throws ZeroLeadingCoefficient
/// when c_d = 0.
PoleEstimate fabry_ratio(const TruncatedSeries& s);

}  // namespace polypath

#endif
