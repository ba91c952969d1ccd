// Roots of complex polynomials: balanced companion-matrix eigenvalues for
// global location, Aberth-Ehrlich simultaneous refinement for polish.
#pragma once

#include <vector>

#include "core/grid.hpp"

namespace nft {

struct RootSolveOptions {
  double trim_rel = 1e-14;   // leading coefficients below trim_rel * max are dropped
  int polish_max_iter = 80;
  double polish_tol = 1e-14;
};

/// Value of the polynomial sum_k coeffs[k] z^k.
cplx polynomial_value(const std::vector<cplx>& coeffs, cplx z);

/// Value of the derivative polynomial.
cplx polynomial_derivative(const std::vector<cplx>& coeffs, cplx z);

/// All roots of the (possibly non-monic) polynomial with ascending
/// coefficients. Near-zero leading coefficients are trimmed before the
/// companion stage; refinement runs against the untrimmed polynomial.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs,
                                   const RootSolveOptions& opt = {});

}  // namespace nft
