#include "polypath/phase.hpp"

#include <cmath>
#include <limits>

#include "polypath/errors.hpp"

namespace polypath {

Complex PhaseGrid::cell(int ix, int iy) const {
  const double re = re_min + (re_max - re_min) * ix / (nx - 1);
  const double im = im_min + (im_max - im_min) * iy / (ny - 1);
  return Complex(re, im);
}

PhaseGrid phase_grid(const std::vector<Complex>& poles, double re_min,
                     double re_max, double im_min, double im_max, int nx, int ny) {
  if (poles.empty()) throw EmptyPoleList("phase portrait needs at least one pole");
  if (nx < 2 || ny < 2) throw DimensionMismatch("grid resolution must be at least 2x2");

  PhaseGrid grid;
  grid.re_min = re_min;
  grid.re_max = re_max;
  grid.im_min = im_min;
  grid.im_max = im_max;
  grid.nx = nx;
  grid.ny = ny;
  grid.phase.resize(static_cast<std::size_t>(nx) * ny);
  grid.magnitude.resize(static_cast<std::size_t>(nx) * ny);

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const Complex z = grid.cell(ix, iy);
      bool at_pole = false;
      Complex f = 0.0;
      for (const Complex& p : poles) {
        if (std::abs(z - p) < 1e-12) {
          at_pole = true;
          break;
        }
        f += 1.0 / (z - p);
      }
      const std::size_t idx = static_cast<std::size_t>(iy) * nx + ix;
      if (at_pole) {
        grid.phase[idx] = 0.0;
        grid.magnitude[idx] = std::numeric_limits<double>::infinity();
      } else {
        double ph = std::arg(f);
        if (ph <= -M_PI) ph = M_PI;  // keep phase in (-pi, pi]
        grid.phase[idx] = ph;
        grid.magnitude[idx] = std::abs(f);
      }
    }
  }
  return grid;
}

}  // namespace polypath
