// Test-only oracle: adaptive Dormand-Prince 5(4) integration of the 2x2
// spectral system, independent of the series representations under test.
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "core/grid.hpp"
#include "core/spline.hpp"

namespace nft::testing {

using State = std::array<cplx, 2>;
using Rhs = std::function<State(double, const State&)>;

inline State rk45_integrate(const Rhs& rhs, State y, double x0, double x1,
                            double rtol = 1e-12, double atol = 1e-14) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double dir = (x1 >= x0) ? 1.0 : -1.0;
  double x = x0;
  double h = dir * std::max(1e-8, std::abs(x1 - x0) / 1000.0);
  int guard = 0;
  while (dir * (x1 - x) > 0 && ++guard < 20000000) {
    if (dir * (x + h - x1) > 0) h = x1 - x;
    const State k1 = rhs(x, y);
    auto stage = [&](double c, const State& incr) {
      State ys;
      for (int i = 0; i < 2; ++i) ys[i] = y[i] + h * incr[i];
      return rhs(x + c * h, ys);
    };
    State t;
    for (int i = 0; i < 2; ++i) t[i] = a21 * k1[i];
    const State k2 = stage(c2, t);
    for (int i = 0; i < 2; ++i) t[i] = a31 * k1[i] + a32 * k2[i];
    const State k3 = stage(c3, t);
    for (int i = 0; i < 2; ++i) t[i] = a41 * k1[i] + a42 * k2[i] + a43 * k3[i];
    const State k4 = stage(c4, t);
    for (int i = 0; i < 2; ++i)
      t[i] = a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i];
    const State k5 = stage(c5, t);
    for (int i = 0; i < 2; ++i)
      t[i] = a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
    const State k6 = stage(1.0, t);
    State y5;
    for (int i = 0; i < 2; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    const State k7 = rhs(x + h, y5);

    double err = 0;
    for (int i = 0; i < 2; ++i) {
      const cplx e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                          e6 * k6[i] + e7 * k7[i]);
      const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / scale);
    }
    if (err <= 1.0) {
      x += h;
      y = y5;
    }
    const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::min(5.0, std::max(0.2, factor));
  }
  return y;
}

/// phi(rho, .) integrated from the left edge with its asymptotic value there.
inline State jost_phi_by_ode(const GridFunction& q, cplx rho, double x_to,
                             double rtol = 1e-12) {
  CubicSpline spline(q.grid.points(), q.values);
  const cplx irho = cplx(0.0, 1.0) * rho;
  const Rhs rhs = [&](double x, const State& n) -> State {
    const cplx qv = spline(x);
    return State{-irho * n[0] + qv * n[1], irho * n[1] - std::conj(qv) * n[0]};
  };
  const double x0 = q.grid.x_min();
  State y{std::exp(-irho * x0), 0.0};
  return rk45_integrate(rhs, y, x0, x_to, rtol);
}

/// Scaled base pair (u, f) = (e^{x/2} psi_1, e^{x/2} psi_2) at rho = i/2,
/// integrated leftwards from the right edge.
inline State base_psi_by_ode(const GridFunction& q, double x_to, double rtol = 1e-12) {
  CubicSpline spline(q.grid.points(), q.values);
  const Rhs rhs = [&](double x, const State& y) -> State {
    const cplx qv = spline(x);
    return State{y[0] + qv * y[1], -std::conj(qv) * y[0]};
  };
  return rk45_integrate(rhs, State{0.0, 1.0}, q.grid.x_max(), x_to, rtol);
}

}  // namespace nft::testing
