#include "polypath/solution.hpp"

#include <cstdio>

namespace polypath {

namespace {

std::string sci15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "% .14E", v);
  return buf;
}

std::string sci3(double v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.3E", v);
  return buf;
}

}  // namespace

std::string format_solution_block(const SolutionPoint& point,
                                  const std::vector<std::string>& names) {
  std::string out;
  out += "t : " + sci15(point.t.real()) + "  " + sci15(point.t.imag()) + "\n";
  out += "m : " + std::to_string(point.multiplicity) + "\n";
  out += "the solution for t :\n";
  for (std::size_t i = 0; i < point.coordinates.size(); ++i) {
    const std::string name = i < names.size() ? names[i] : "x" + std::to_string(i);
    out += " " + name + " : " + sci15(point.coordinates[i].real()) + "  " +
           sci15(point.coordinates[i].imag()) + "\n";
  }
  out += "== err :  " + sci3(point.err) + " = rco :  " + sci3(point.rco) +
         " = res :  " + sci3(point.res) + " =\n";
  return out;
}

}  // namespace polypath
