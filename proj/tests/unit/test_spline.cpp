#include <doctest.h>

#include <cmath>

#include "core/quadrature.hpp"
#include "core/spline.hpp"

using namespace nft;

TEST_CASE("spline derivative reproduces polynomials") {
  const UniformGrid g = UniformGrid::with_count(-1.0, 1.0, 51);
  const GridFunction sq = GridFunction::tabulate(g, [](double x) { return cplx(x * x); });
  const GridFunction d = spline_derivative(sq);
  double worst = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    worst = std::max(worst, std::abs(d[i] - 2.0 * g.x(i)));
  CHECK(worst <= 1e-10);

  const GridFunction c = GridFunction::tabulate(g, [](double) { return cplx(3.0, -2.0); });
  CHECK(spline_derivative(c).max_abs() <= 1e-13);

  const GridFunction cube =
      GridFunction::tabulate(g, [](double x) { return cplx(x * x * x, -x); });
  const GridFunction dc = spline_derivative(cube);
  worst = 0;
  for (std::size_t i = 0; i < dc.size(); ++i)
    worst = std::max(worst, std::abs(dc[i] - cplx(3.0 * g.x(i) * g.x(i), -1.0)));
  CHECK(worst <= 1e-10);
}

TEST_CASE("spline derivative of sech at production density") {
  const UniformGrid g = UniformGrid::with_density(-10.0, 10.0, 1500.0);
  const GridFunction f =
      GridFunction::tabulate(g, [](double x) { return cplx(1.0 / std::cosh(x)); });
  const GridFunction d = spline_derivative(f);
  double worst = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double x = g.x(i);
    worst = std::max(worst, std::abs(d[i] + std::tanh(x) / std::cosh(x)));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("derivative then cumulative recovers the function") {
  const UniformGrid g = UniformGrid::with_density(-3.0, 3.0, 400.0);
  const GridFunction f = GridFunction::tabulate(
      g, [](double x) { return std::exp(cplx(0.0, 1.3) * x) / std::cosh(x); });
  const GridFunction d = spline_derivative(f);
  const GridFunction F = cumulative_from_left(d);
  double worst = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    worst = std::max(worst, std::abs(F[i] - (f[i] - f[0])));
  CHECK(worst <= 1e-8);
}

TEST_CASE("spline evaluation interpolates and rejects extrapolation") {
  std::vector<double> x{0.0, 0.5, 1.5, 2.0, 3.0, 4.0};
  std::vector<cplx> y;
  for (double xi : x) y.emplace_back(std::sin(xi), std::cos(xi));
  const CubicSpline s(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(s(x[i]) - y[i]) < 1e-13);
  CHECK_THROWS_AS(s(4.5), error);
  CHECK_THROWS_AS(s(-0.5), error);
}

TEST_CASE("spline needs five knots") {
  std::vector<double> x{0.0, 1.0, 2.0, 3.0};
  std::vector<cplx> y(4, cplx(1.0));
  CHECK_THROWS_AS(CubicSpline(x, y), error);
}
