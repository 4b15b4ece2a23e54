#ifndef POLYPATH_PHASE_HPP
#define POLYPATH_PHASE_HPP

#include <vector>

#include "polypath/linalg.hpp"

namespace polypath {

/// Phase and magnitude of f(z) = sum over poles of 1/(z - p) on a regular
/// grid.  Cells within 1e-12 of a pole carry magnitude = +infinity.
/// Row-major with ny rows of nx cells; phase lies in (-pi, pi].
struct PhaseGrid {
  double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;
  int nx = 0, ny = 0;
  std::vector<double> phase;
  std::vector<double> magnitude;

  Complex cell(int ix, int iy) const;
};

PhaseGrid phase_grid(const std::vector<Complex>& poles, double re_min,
                     double re_max, double im_min, double im_max, int nx, int ny);

}  // namespace polypath

#endif
