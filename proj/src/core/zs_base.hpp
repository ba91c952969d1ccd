// Base Jost solutions of the Zakharov-Shabat system at rho = i/2, computed in
// exponentially scaled variables, and the zeroth power-series coefficients
// derived from them.
//
// Scaled unknowns:
//   f = e^{x/2} psi_2,  u = e^{x/2} psi_1   with  u' = u + q f,  f' = -conj(q) u,
//   g = e^{-x/2} phi_1, v = e^{-x/2} phi_2  with  g' = q v,  v' = -v - conj(q) g,
// subject to (u, f) -> (0, 1) at x_max and (g, v) -> (1, 0) at x_min.
#pragma once

#include "core/grid.hpp"

namespace nft {

struct BaseSolveOptions {
  double tolerance = 1e-13;  // max-norm change between iterates
  int max_iterations = 200;
};

struct BaseJost {
  GridFunction f;
  GridFunction f_prime;
  GridFunction g;
  GridFunction g_prime;
  GridFunction psi1_scaled;  // e^{x/2} psi_1(i/2, x)
  GridFunction phi2_scaled;  // e^{-x/2} phi_2(i/2, x)
  int iterations = 0;
  double final_update = 0;
};

/// Solves the Volterra integral form of the scaled systems by fixed-point
/// iteration. Throws errc::base_solve when the update does not drop below the
/// tolerance within max_iterations.
BaseJost solve_base(const GridFunction& q, const BaseSolveOptions& opt = {});

struct ZerothCoefficients {
  GridFunction a10, a20, b10, b20;
  GridFunction a10_prime, b20_prime;
};

/// Zeroth-order series coefficients and derivative seeds, built algebraically
/// from the base solutions (no division by q).
ZerothCoefficients zeroth_coefficients(const BaseJost& base, const GridFunction& q);

}  // namespace nft
