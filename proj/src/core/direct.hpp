// Direct scattering: a(rho), b(rho) from truncated series products at x = 0,
// eigenvalues as polynomial roots in the unit disk, norming constants from
// the quotients of the Jost components.
#pragma once

#include <optional>

#include "core/potentials.hpp"
#include "core/scattering_data.hpp"
#include "core/spps.hpp"

namespace nft {

struct RhoGridSpec {
  std::size_t count = 5000;  // rounded up to an even number
  double rho_min = 1e-3;
  double rho_max = 70.0;
};

/// Logarithmically spaced samples of [rho_min, rho_max], mirrored negatively;
/// returned in ascending order.
std::vector<double> log_spaced_rho_grid(const RhoGridSpec& spec);

/// Coefficient polynomials at x = 0; coefficient n carries the (-1)^n sign,
/// so every series becomes a plain polynomial in z.
struct SppsPolynomials {
  std::vector<cplx> b1, a2, b2, a1;
  int order = 0;
};

SppsPolynomials polynomials_at_origin(const SppsTable& table);

/// a(rho) for rho in the closed upper half-plane (|z| <= 1).
cplx evaluate_a(const SppsPolynomials& polys, const SpectralPoint& point);

/// b(rho) for real rho (|z| = 1).
cplx evaluate_b(const SppsPolynomials& polys, const SpectralPoint& point);

/// Coefficients of the degree 2N+2 polynomial whose unit-disk roots are the
/// eigenvalue images z_m.
std::vector<cplx> a_polynomial(const SppsPolynomials& polys);

struct NormingQuotients {
  cplx first, second;  // phi_1/psi_1 and phi_2/psi_2 at x = 0
  cplx chosen;         // quotient with the larger denominator
  double gap;          // |first - second|
};

/// Both norming-constant quotients at z inside the disk.
NormingQuotients norming_quotients(const SppsPolynomials& polys, cplx z);

struct EigenvalueFilterOptions {
  double disk_margin = 1e-6;    // keep |z| <= 1 - margin
  double residual_tol = 1e-8;   // |a_N(z)| relative to max on the circle
  double quotient_tol = 1e-6;   // agreement of the two norming quotients
};

struct DiscreteEigenvalue {
  cplx z;
  cplx rho;
  cplx norming_constant;
  double residual = 0;      // |a_N(z)| / max_circle
  double quotient_gap = 0;  // disagreement of the two quotients
};

/// Unit-disk roots of the a-polynomial that survive the residual and
/// quotient-agreement filters, sorted by descending imaginary part of rho.
/// An empty result is valid.
std::vector<DiscreteEigenvalue> find_eigenvalues(const SppsPolynomials& polys,
                                                 const EigenvalueFilterOptions& opt = {});

struct DirectOptions {
  int order = 160;
  double nodes_per_unit = 1500.0;
  RhoGridSpec rho;
  std::optional<std::pair<double, double>> domain;  // override for select_domain
  double tail_threshold = 1e-7;
  BaseSolveOptions base;
  EigenvalueFilterOptions filter;
  std::vector<double> probe_x;  // extra stored columns for diagnostics
};

/// Full direct pipeline on an already sampled potential.
ScatteringData run_direct(const GridFunction& q, const DirectOptions& opt = {});

/// Domain selection, sampling, then the pipeline above.
ScatteringData run_direct(const PotentialSpec& spec, const DirectOptions& opt = {});

}  // namespace nft
