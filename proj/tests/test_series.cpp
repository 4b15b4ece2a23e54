#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polypath/errors.hpp"
#include "polypath/parse.hpp"
#include "polypath/series.hpp"

using namespace polypath;

namespace {

TruncatedSeries make(std::vector<Complex> c) { return TruncatedSeries(std::move(c)); }

}  // namespace

TEST_CASE("series arithmetic truncates to the shorter operand") {
  const TruncatedSeries a = make({1.0, 2.0, 3.0});
  const TruncatedSeries b = make({1.0, -1.0});
  const TruncatedSeries sum = series_add(a, b);
  REQUIRE(sum.degree() == 1);
  CHECK(sum[0] == Complex(2.0));
  CHECK(sum[1] == Complex(1.0));
  const TruncatedSeries prod = series_mul(a, b);
  REQUIRE(prod.degree() == 1);
  CHECK(prod[0] == Complex(1.0));
  CHECK(prod[1] == Complex(1.0));  // 2 - 1
}

TEST_CASE("series division inverts multiplication") {
  const TruncatedSeries a = make({1.0, 2.0, 3.0, 4.0});
  const TruncatedSeries b = make({2.0, -1.0, 0.5, 0.0});
  const TruncatedSeries q = series_div(a, b);
  const TruncatedSeries back = series_mul(q, b);
  for (int n = 0; n <= 3; ++n) CHECK(std::abs(back[n] - a[n]) < 1e-14);
  CHECK_THROWS_AS(series_div(a, make({0.0, 1.0})), DivisionByZeroSeries);
}

TEST_CASE("series_arith dispatches all four operations") {
  const TruncatedSeries a = make({3.0, 1.0});
  const TruncatedSeries b = make({1.0, 1.0});
  CHECK(series_arith(a, b, SeriesOp::sub)[0] == Complex(2.0));
  CHECK(series_arith(a, b, SeriesOp::div)[1] == Complex(-2.0));  // 3 - 2t + ...
}

TEST_CASE("evaluate_series substitutes and truncates") {
  const std::vector<std::string> vars{"x"};
  const Polynomial p = parse_polynomial("x^2;", vars);
  const TruncatedSeries x = make({1.0, 1.0, 0.0});  // 1 + t
  const TruncatedSeries out = evaluate_series(p, {x}, 2);
  CHECK(out[0] == Complex(1.0));
  CHECK(out[1] == Complex(2.0));
  CHECK(out[2] == Complex(1.0));
}

TEST_CASE("power-series Newton recovers sqrt(1 - t)") {
  const PolynomialSystem sys = parse_system({"x^2 - 1 + t;", {}});
  SolutionPoint start;
  start.coordinates = {Complex(1.0)};
  const SeriesVector series = series_newton_at_point(sys, start, 1, 8, 5);
  REQUIRE(series.components.size() == 1);
  const TruncatedSeries& s = series.components[0];
  REQUIRE(s.degree() == 8);
  CHECK(std::abs(s[0] - Complex(1.0)) < 1e-14);
  CHECK(std::abs(s[1] - Complex(-0.5)) < 1e-14);
  CHECK(std::abs(s[2] - Complex(-0.125)) < 1e-14);
  CHECK(std::abs(s[3] - Complex(-1.0 / 16.0)) < 1e-14);
}

TEST_CASE("expansion around a shifted center uses the local parameter") {
  // around t = 0.5 the branch is sqrt(0.5 - s), so c_0 = sqrt(0.5)
  const PolynomialSystem sys = parse_system({"x^2 - 1 + t;", {}});
  SolutionPoint start;
  start.t = Complex(0.5);
  start.coordinates = {Complex(std::sqrt(0.5))};
  const SeriesVector series = series_newton_at_point(sys, start, 1, 4, 4);
  const TruncatedSeries& s = series.components[0];
  CHECK(std::abs(s[0] - Complex(std::sqrt(0.5))) < 1e-14);
  CHECK(std::abs(s[1] - Complex(-0.5 / std::sqrt(0.5))) < 1e-13);
}

TEST_CASE("the parameter may sit at any variable index") {
  // same curve with the parameter declared first
  const PolynomialSystem sys =
      parse_system({"x^2 - 1 + t;", std::vector<std::string>{"t", "x"}});
  SolutionPoint start;
  start.coordinates = {Complex(1.0)};
  const SeriesVector series = series_newton_at_point(sys, start, 0, 4, 4);
  CHECK(std::abs(series.components[0][1] - Complex(-0.5)) < 1e-14);
}

TEST_CASE("a singular Jacobian at the expansion point throws") {
  const PolynomialSystem sys = parse_system({"x^2 - t;", {}});
  SolutionPoint start;
  start.coordinates = {Complex(0.0)};
  CHECK_THROWS_AS(series_newton_at_point(sys, start, 1, 4, 3), SingularJacobian);
}

TEST_CASE("Fabry ratio of sqrt(1 - t) at degree 32") {
  const PolynomialSystem sys = parse_system({"x^2 - 1 + t;", {}});
  SolutionPoint start;
  start.coordinates = {Complex(1.0)};
  const SeriesVector series = series_newton_at_point(sys, start, 1, 32, 7);
  const PoleEstimate est = fabry_ratio(series.components[0]);
  // c_{n-1}/c_n = n/(n - 3/2) for this branch, with n = 32
  CHECK(std::abs(est.location - Complex(32.0 / 30.5)) < 1e-12);
  CHECK(est.modulus == doctest::Approx(32.0 / 30.5));
}

TEST_CASE("Fabry requires a nonzero leading coefficient") {
  CHECK_THROWS_AS(fabry_ratio(make({1.0, 2.0, 0.0})), ZeroLeadingCoefficient);
}

TEST_CASE("dimension checks on malformed input") {
  const PolynomialSystem square = parse_system({"x^2 - 2;", {}});
  SolutionPoint start;
  start.coordinates = {Complex(1.0)};
  CHECK_THROWS_AS(series_newton_at_point(square, start, 0, 4, 3),
                  DimensionMismatch);
}
