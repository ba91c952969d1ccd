// Closed-form references: complex Gamma function, the Gamma-quotient
// scattering coefficients of the chirped-sech potential, and the
// single-soliton solution.
#pragma once

#include "core/grid.hpp"

namespace nft {

/// Complex Gamma via a 9-term Lanczos sum (g = 7) with reflection for
/// Re w < 1/2. Throws errc::pole at non-positive integers.
cplx gamma_function(cplx w);

/// Parameters of the chirped-sech potential -iA sech(x) exp(-i gamma A ln cosh x)
/// together with the derived quantities of its closed-form scattering data.
struct ChirpedSechParams {
  double A = 1.0;
  double gamma = 0.1;

  cplx T() const;           // sqrt(gamma^2/4 - 1), principal branch
  cplx omega(cplx rho) const;
  cplx omega_plus() const;
  cplx omega_minus() const;

  int eigenvalue_count() const;   // floor(1/2 + A |T|)
  cplx eigenvalue(int m) const;   // rho_m = A T - i (m - 1/2), m >= 1
};

cplx analytic_a_chirped_sech(const ChirpedSechParams& p, cplx rho);
cplx analytic_b_chirped_sech(const ChirpedSechParams& p, cplx rho);

/// Norming constant of the m-th eigenvalue: b evaluated at rho_m.
cplx analytic_norming_chirped_sech(const ChirpedSechParams& p, int m);

/// u(x,t) = 2 beta sech(2 beta x + 8 alpha beta t - delta)
///          exp(-2 i alpha x - 4 i (alpha^2 - beta^2) t - i theta)
cplx soliton_solution(double alpha, double beta, double delta, double theta, double x,
                      double t);

}  // namespace nft
