#ifndef POLYPATH_NEWTON_HPP
#define POLYPATH_NEWTON_HPP

#include "polypath/polynomial.hpp"
#include "polypath/solution.hpp"

namespace polypath {

struct NewtonOptions {
  int max_iters = 4;
  double tol = 1e-12;
};

struct NewtonOutcome {
  SolutionPoint point;  // best iterate, diagnostics filled in
  bool converged = false;
  int iterations = 0;
};

/// Pointwise Newton corrector.  The system must be square in the unknowns:
/// with t_index >= 0 that variable is held fixed at t_value and the guess
/// supplies the remaining coordinates in variable order; with t_index < 0
/// the system is square as given and t_value is ignored.
///
/// The returned point carries err (max norm of the last update), res
/// (max-norm residual at the result) and rco (inverse condition number
/// estimate of the Jacobian at the result).  A SingularMatrix from the
/// linear solves propagates; failure to reach tol is reported through
/// converged = false with the best iterate retained.
NewtonOutcome newton_correct(const PolynomialSystem& sys,
                             const std::vector<Complex>& guess, int t_index,
                             Complex t_value, const NewtonOptions& opts = {});

}  // namespace polypath

#endif
