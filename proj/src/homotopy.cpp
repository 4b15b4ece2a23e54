#include "polypath/homotopy.hpp"

#include <algorithm>

#include "polypath/errors.hpp"

namespace polypath {

std::vector<std::string> Homotopy::unknown_names() const {
  std::vector<std::string> names;
  for (int j = 0; j < static_cast<int>(working.variables.size()); ++j)
    if (j != t_index) names.push_back(working.variables[j]);
  return names;
}

Homotopy make_artificial_homotopy(const PolynomialSystem& target,
                                  const PolynomialSystem& start, Complex gamma) {
  if (gamma == Complex(0.0)) throw Error("gamma must be nonzero");
  if (target.variables != start.variables)
    throw DimensionMismatch("target and start systems must share their variables");
  if (target.polynomials.size() != start.polynomials.size())
    throw DimensionMismatch("target and start systems must have equal counts");
  if (target.polynomials.size() != target.variables.size())
    throw DimensionMismatch("artificial homotopy needs a square target system");

  const int n = static_cast<int>(target.variables.size());
  std::string tname = "t";
  while (std::find(target.variables.begin(), target.variables.end(), tname) !=
         target.variables.end())
    tname += "_";

  Homotopy h;
  h.kind = Homotopy::Kind::artificial;
  h.target = target;
  h.start = start;
  h.gamma = gamma;
  h.t_index = n;
  h.working.variables = target.variables;
  h.working.variables.push_back(tname);

  // gamma*(1-t) and t as polynomials in the extended variable set.
  Polynomial gamma_one_minus_t(n + 1);
  gamma_one_minus_t.add_term(gamma, std::vector<int>(n + 1, 0));
  {
    std::vector<int> e(n + 1, 0);
    e[n] = 1;
    gamma_one_minus_t.add_term(-gamma, e);
  }
  Polynomial tpoly(n + 1);
  {
    std::vector<int> e(n + 1, 0);
    e[n] = 1;
    tpoly.add_term(1.0, e);
  }

  for (std::size_t i = 0; i < target.polynomials.size(); ++i) {
    const Polynomial g = start.polynomials[i].extended(n + 1);
    const Polynomial f = target.polynomials[i].extended(n + 1);
    h.working.polynomials.push_back(gamma_one_minus_t * g + tpoly * f);
  }
  return h;
}

Homotopy make_natural_homotopy(const PolynomialSystem& sys, int t_index) {
  if (sys.variables.size() != sys.polynomials.size() + 1)
    throw DimensionMismatch(
        "natural homotopy needs exactly one more variable than polynomials");
  if (t_index < 0 || t_index >= static_cast<int>(sys.variables.size()))
    throw DimensionMismatch("parameter index out of range");
  Homotopy h;
  h.kind = Homotopy::Kind::natural;
  h.working = sys;
  h.t_index = t_index;
  return h;
}

}  // namespace polypath
