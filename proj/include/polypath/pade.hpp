#ifndef POLYPATH_PADE_HPP
#define POLYPATH_PADE_HPP

#include "polypath/series.hpp"

namespace polypath {

/// Rational approximant [L/M]: numerator degree L, denominator degree M,
/// denominator constant term normalized to 1 exactly.
struct PadeApproximant {
  std::vector<Complex> numerator;    // length L+1
  std::vector<Complex> denominator;  // length M+1, denominator[0] == 1

  int numerator_degree() const { return static_cast<int>(numerator.size()) - 1; }
  int denominator_degree() const { return static_cast<int>(denominator.size()) - 1; }

  Complex evaluate(Complex s) const;
};

/// Builds the [L/M] approximant whose Maclaurin expansion matches s through
/// order L+M.  The denominator comes from the M x M Toeplitz system in the
/// coefficients c_{L-M+1}..c_{L+M}; throws SingularToeplitz when that
/// system is numerically singular (reduce M and retry).
PadeApproximant pade_from_series(const TruncatedSeries& s, int L, int M);

/// All denominator roots, sorted by ascending modulus.  Closed form for
/// M in {1, 2}, simultaneous (Durand-Kerner) iteration for M >= 3.  Throws
/// DegenerateDenominator when the leading denominator coefficient is below
/// 1e-14 of the largest one.
std::vector<PoleEstimate> pade_poles(const PadeApproximant& p);

/// Smallest-modulus pole over the [L/M] approximants of all components,
/// relative to the expansion center.  Components whose Toeplitz systems
/// degenerate are retried with smaller M; throws NoPoles when no component
/// supports M >= 1.
PoleEstimate closest_pole(const SeriesVector& series, int L, int M);

/// Per-component approximants with automatic reduction of M on degeneracy
/// (down to [L/0]).  Used by the tracker for prediction.
std::vector<PadeApproximant> build_pades(const SeriesVector& series, int L, int M);

/// Roots of c_0 + c_1 z + ... + c_n z^n (ascending coefficients).
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coefficients);

}  // namespace polypath

#endif
