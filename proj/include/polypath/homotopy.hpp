#ifndef POLYPATH_HOMOTOPY_HPP
#define POLYPATH_HOMOTOPY_HPP

#include "polypath/polynomial.hpp"

namespace polypath {

/// A one-parameter family of polynomial systems.  The working system always
/// carries the parameter as one of its variables (index t_index), so it has
/// one more variable than polynomials.
struct Homotopy {
  enum class Kind { artificial, natural };

  Kind kind = Kind::natural;
  PolynomialSystem target;  // artificial only
  PolynomialSystem start;   // artificial only
  Complex gamma{0.0, 0.0};  // artificial only
  PolynomialSystem working;
  int t_index = -1;

  std::size_t num_unknowns() const { return working.variables.size() - 1; }
  std::vector<std::string> unknown_names() const;
};

/// H(x, t) = gamma (1-t) G(x) + t F(x) with t adjoined as a fresh variable.
/// Target and start must share the same variables; gamma must be nonzero.
Homotopy make_artificial_homotopy(const PolynomialSystem& target,
                                  const PolynomialSystem& start, Complex gamma);

/// A system that already contains its parameter: n polynomials in n+1
/// variables, with t_index naming the parameter.
Homotopy make_natural_homotopy(const PolynomialSystem& sys, int t_index);

}  // namespace polypath

#endif
