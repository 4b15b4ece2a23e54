#ifndef POLYPATH_SOLUTION_HPP
#define POLYPATH_SOLUTION_HPP

#include <string>
#include <vector>

#include "polypath/linalg.hpp"

namespace polypath {

/// One node on a solution path: the parameter value, the coordinates and
/// the corrector diagnostics (last update norm, inverse condition number
/// estimate, residual norm; max norm throughout).
struct SolutionPoint {
  Complex t{0.0, 0.0};
  std::vector<Complex> coordinates;
  int multiplicity = 1;
  double err = 0.0;
  double rco = 1.0;
  double res = 0.0;
};

/// Renders the solution block layout used by the path tracker output:
///
///     t :  9.99968379127468E-01   0.00000000000000E+00
///     m : 1
///     the solution for t :
///      x :  1.05353846638456E+00   6.88135807075172E-03
///     == err :  6.369E-14 = rco :  7.184E-04 = res :  2.849E-17 =
std::string format_solution_block(const SolutionPoint& point,
                                  const std::vector<std::string>& names);

}  // namespace polypath

#endif
