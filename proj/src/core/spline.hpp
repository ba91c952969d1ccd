// Complex-valued cubic spline interpolation with not-a-knot end conditions,
// on arbitrary strictly increasing knots. Used for numerical differentiation
// and for regridding externally supplied samples.
#pragma once

#include <vector>

#include "core/grid.hpp"

namespace nft {

class CubicSpline {
 public:
  /// Builds the not-a-knot interpolant; needs at least 5 knots.
  CubicSpline(std::vector<double> x, std::vector<cplx> y);

  cplx operator()(double x) const;
  cplx derivative(double x) const;

  double x_front() const noexcept { return x_.front(); }
  double x_back() const noexcept { return x_.back(); }

  /// Derivative values at all knots, computed without interval search.
  std::vector<cplx> derivatives_at_knots() const;

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<cplx> y_;
  std::vector<cplx> m_;  // second derivatives at the knots
};

/// Derivative of the not-a-knot spline interpolant of fn at the grid nodes.
GridFunction spline_derivative(const GridFunction& fn);

}  // namespace nft
