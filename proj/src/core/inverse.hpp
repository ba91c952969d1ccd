// Inverse scattering: per-x overdetermined linear systems built from the
// scattering relations, least-squares solution for the leading series
// coefficients, and potential recovery from the zeroth coefficients.
#pragma once

#include <Eigen/Dense>
#include <memory>

#include "core/scattering_data.hpp"

namespace nft {

struct InverseConfig {
  int order = 50;               // N: coefficients 0..N-1 per block
  std::size_t sample_limit = 0; // 0 = use every stored rho sample
  double x_min = 0, x_max = 0;  // x_min >= x_max = use the data's domain
  double x_step = 0.01;
  double regularization = 0;    // ridge on the normal matrix; 0 = escalate only on failure
  int refine_steps = 1;         // corrected-residual refinements of the Gram solve
  bool residual_report = true;
  double recovery_floor = 1e-10;
  // weight of the bound-state rows relative to their equilibrated (unit
  // infinity-norm) form. The raw rows carry e^{|Im rho| |x|} magnitudes, so
  // plain least squares treats the eigenvalue relations as near-constraints;
  // a saturating large weight keeps that behavior without the overflow.
  double discrete_weight = 1e6;
};

/// Literal rows of the per-x system. Row order: (2k, 2k+1) carry the
/// reflection relations for sample k; rows 2K+2m, 2K+2m+1 carry the
/// bound-state relations for eigenvalue m. Unknown order:
/// [b1_{0..N-1} | a1_{0..N-1} | conj(a2)_{0..N-1} | conj(b2)_{0..N-1}].
void assemble_system(const ScatteringData& sd, double x, const InverseConfig& cfg,
                     Eigen::MatrixXcd& matrix, Eigen::VectorXcd& rhs);

struct SolveAtResult {
  Eigen::VectorXcd blocks;  // length 4N
  double rel_residual = 0;
};

/// Dense orthogonal-factorization reference solve at one x.
SolveAtResult solve_at(const ScatteringData& sd, double x, const InverseConfig& cfg);

/// Precomputed fast solver; mathematically the same least-squares problem as
/// solve_at. Safe to call solve() from several threads.
class InverseEngine {
 public:
  InverseEngine(const ScatteringData& sd, const InverseConfig& cfg);
  ~InverseEngine();
  InverseEngine(const InverseEngine&) = delete;
  InverseEngine& operator=(const InverseEngine&) = delete;

  SolveAtResult solve(double x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct InverseSolveResult {
  GridFunction q_recovered;
  GridFunction b10, b20, a10, a20;
  std::vector<double> ls_residuals;  // per grid point
  double wronskian_epsilon = 0;
};

/// Potential from the zeroth coefficients: q = G1'/G2 or
/// conj(q) = -(G2' + G2)/G1 with G1 = 1 + b10, G2 = b20; at every node the
/// candidate with the larger denominator wins.
GridFunction recover_potential(const GridFunction& b10, const GridFunction& b20,
                               double floor = 1e-10);

/// Spread of |W[phi(i/2,.), psi(i/2,.)]| over the grid, with the base
/// solutions reconstructed from the recovered zeroth coefficients.
double wronskian_indicator(const GridFunction& b10, const GridFunction& b20,
                           const GridFunction& a10, const GridFunction& a20);

/// Per-x solves over the recovery grid, then potential recovery and the
/// Wronskian indicator.
InverseSolveResult run_inverse(const ScatteringData& sd, const InverseConfig& cfg);

}  // namespace nft
