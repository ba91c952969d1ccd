// Composite 6-point Newton-Cotes quadrature on uniform grids: full-interval
// integrals, cumulative integrals from either endpoint, and cumulative
// integrals with the exponential kernels exp(x-t) / exp(t-x).
//
// Per 6-node panel every rule integrates the interpolating quintic exactly,
// so cumulative values are degree-5 exact at all nodes.
#pragma once

#include "core/grid.hpp"

namespace nft {

/// Integral of fn over the whole grid interval.
cplx integrate(const GridFunction& fn);

/// F(x_j) = integral of fn over [x_min, x_j]; F(x_min) = 0.
GridFunction cumulative_from_left(const GridFunction& fn);

/// F(x_j) = integral of fn over [x_j, x_max]; F(x_max) = 0.
GridFunction cumulative_from_right(const GridFunction& fn);

/// E(x_j) = integral over [x_j, x_max] of exp(x_j - t) fn(t) dt.
/// The kernel never exceeds 1, so values stay bounded on wide domains.
GridFunction exp_cumulative_from_right(const GridFunction& fn);

/// E(x_j) = integral over [x_min, x_j] of exp(t - x_j) fn(t) dt.
GridFunction exp_cumulative_from_left(const GridFunction& fn);

}  // namespace nft
