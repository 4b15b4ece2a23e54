#include "polypath/pade.hpp"

#include <algorithm>
#include <cmath>

#include "polypath/errors.hpp"
#include "polypath/linalg.hpp"

namespace polypath {

Complex PadeApproximant::evaluate(Complex s) const {
  auto horner = [&](const std::vector<Complex>& c) {
    Complex v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * s + c[k];
    return v;
  };
  return horner(numerator) / horner(denominator);
}

PadeApproximant pade_from_series(const TruncatedSeries& s, int L, int M) {
  if (L < 0 || M < 0) throw DimensionMismatch("Pade degrees must be nonnegative");
  if (s.degree() < L + M)
    throw DimensionMismatch("series degree too small for the requested [L/M]");
  auto c = [&](int i) { return i >= 0 ? s[i] : Complex(0.0); };

  std::vector<Complex> den(M + 1, Complex(0.0));
  den[0] = 1.0;
  if (M > 0) {
    CMatrix a(M, M);
    std::vector<Complex> rhs(M);
    double scale = 0.0;
    for (int r = 0; r < M; ++r) {
      const int k = L + 1 + r;
      for (int j = 1; j <= M; ++j) {
        a(r, j - 1) = c(k - j);
        scale = std::max(scale, std::abs(a(r, j - 1)));
      }
      rhs[r] = -c(k);
    }
    try {
      const LuDecomposition lu(a, 1e-14 * std::max(scale, 1e-300));
      const std::vector<Complex> b = lu.solve(rhs);
      for (int j = 1; j <= M; ++j) den[j] = b[j - 1];
    } catch (const SingularMatrix&) {
      throw SingularToeplitz("Toeplitz system for the Pade denominator is singular");
    }
  }

  std::vector<Complex> num(L + 1);
  for (int k = 0; k <= L; ++k) {
    Complex v = 0.0;
    for (int j = 0; j <= std::min(k, M); ++j) v += den[j] * c(k - j);
    num[k] = v;
  }
  return PadeApproximant{std::move(num), std::move(den)};
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coefficients) {
  std::vector<Complex> c = coefficients;
  while (c.size() > 1 && c.back() == Complex(0.0)) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  if (n == 1) return {-c[0] / c[1]};
  if (n == 2) {
    const Complex a = c[2], b = c[1], d = c[0];
    const Complex disc = std::sqrt(b * b - 4.0 * a * d);
    // Pick the sign that avoids cancellation in -b -/+ disc.
    const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                              : -0.5 * (b - disc);
    if (q == Complex(0.0)) return {Complex(0.0), Complex(0.0)};
    return {q / a, d / q};
  }
  // Durand-Kerner simultaneous iteration on the monic polynomial.
  std::vector<Complex> monic(c.begin(), c.end() - 1);
  for (Complex& v : monic) v /= c.back();
  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) {
    p *= seed;
    z[k] = p;
  }
  auto eval_monic = [&](Complex w) {
    Complex v = 1.0;
    for (int k = n - 1; k >= 0; --k) v = v * w + monic[k];
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      const Complex dz = eval_monic(z[k]) / denom;
      z[k] -= dz;
      shift = std::max(shift, std::abs(dz));
    }
    if (shift < 1e-14) break;
  }
  return z;
}

std::vector<PoleEstimate> pade_poles(const PadeApproximant& p) {
  const int M = p.denominator_degree();
  if (M < 1) throw DimensionMismatch("pole extraction needs M >= 1");
  double maxc = 0.0;
  for (const Complex& v : p.denominator) maxc = std::max(maxc, std::abs(v));
  if (std::abs(p.denominator.back()) < 1e-14 * maxc)
    throw DegenerateDenominator(
        "denominator is effectively of lower degree; reduce M and recompute");
  std::vector<Complex> roots = polynomial_roots(p.denominator);
  std::vector<PoleEstimate> poles;
  poles.reserve(roots.size());
  for (const Complex& r : roots) poles.push_back(PoleEstimate{r, std::abs(r)});
  std::sort(poles.begin(), poles.end(),
            [](const PoleEstimate& a, const PoleEstimate& b) { return a.modulus < b.modulus; });
  return poles;
}

std::vector<PadeApproximant> build_pades(const SeriesVector& series, int L, int M) {
  std::vector<PadeApproximant> pades;
  pades.reserve(series.components.size());
  for (const TruncatedSeries& s : series.components) {
    for (int m = M;; --m) {
      try {
        PadeApproximant p = pade_from_series(s, L, m);
        if (m >= 1) pade_poles(p);  // probe for degeneracy before accepting
        pades.push_back(std::move(p));
        break;
      } catch (const SingularToeplitz&) {
        if (m == 0) throw;
      } catch (const DegenerateDenominator&) {
        if (m == 0) throw;
      }
    }
  }
  return pades;
}

PoleEstimate closest_pole(const SeriesVector& series, int L, int M) {
  const std::vector<PadeApproximant> pades = build_pades(series, L, M);
  bool found = false;
  PoleEstimate best{};
  for (const PadeApproximant& p : pades) {
    if (p.denominator_degree() < 1) continue;
    for (const PoleEstimate& pole : pade_poles(p)) {
      if (!found || pole.modulus < best.modulus) {
        best = pole;
        found = true;
      }
    }
  }
  if (!found)
    throw NoPoles("no component admits a nondegenerate denominator of degree >= 1");
  return best;
}

}  // namespace polypath
