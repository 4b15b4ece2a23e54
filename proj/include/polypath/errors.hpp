#ifndef POLYPATH_ERRORS_HPP
#define POLYPATH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polypath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// polyparse
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};
struct UndeclaredVariable : Error {
  using Error::Error;
};
struct ExponentError : Error {
  using Error::Error;
};

// algebra
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};

// series / pade
struct SingularJacobian : Error {
  using Error::Error;
};
struct DivisionByZeroSeries : Error {
  using Error::Error;
};
struct ZeroLeadingCoefficient : Error {
  using Error::Error;
};
struct SingularToeplitz : Error {
  using Error::Error;
};
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct NoPoles : Error {
  using Error::Error;
};

// tracker
struct NotAStartSolution : Error {
  using Error::Error;
};

// extrapolate
struct ZeroSecondDifference : Error {
  using Error::Error;
};
struct ZeroRhoDifference : Error {
  using Error::Error;
};

// cli / phase
struct EmptyPoleList : Error {
  using Error::Error;
};

}  // namespace polypath

#endif
