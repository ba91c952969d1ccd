#include "core/polyroots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace nft {
namespace {

double abs1(const cplx& c) { return std::abs(c.real()) + std::abs(c.imag()); }

// Parlett-Reinsch balancing with radix-2 scaling.
void balance(Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0, c = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      double f = 1.0;
      const double s = c + r;
      while (c < r / 2.0) {
        c *= 4.0;
        r /= 4.0;
        f *= 2.0;
      }
      while (c >= r * 2.0) {
        c /= 4.0;
        r *= 4.0;
        f /= 2.0;
      }
      if ((c + r) < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

cplx polynomial_value(const std::vector<cplx>& coeffs, cplx z) {
  cplx v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
  return v;
}

cplx polynomial_derivative(const std::vector<cplx>& coeffs, cplx z) {
  cplx v = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) v = v * z + double(k) * coeffs[k];
  return v;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs,
                                   const RootSolveOptions& opt) {
  double cmax = 0;
  for (const cplx& c : coeffs) cmax = std::max(cmax, std::abs(c));
  if (cmax == 0) return {};

  std::vector<cplx> p = coeffs;
  for (cplx& c : p) c /= cmax;

  // Drop negligible leading coefficients; they only produce far-field roots.
  std::size_t deg = p.size() - 1;
  while (deg > 0 && std::abs(p[deg]) <= opt.trim_rel) --deg;
  if (deg == 0) return {};

  std::vector<cplx> roots;
  // Exact zero constant terms give roots at the origin.
  std::size_t low = 0;
  while (low < deg && p[low] == cplx(0.0)) {
    roots.push_back(cplx(0.0));
    ++low;
  }
  const std::size_t d = deg - low;
  if (d > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -p[low + i] / p[deg];
    balance(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    require(solver.info() == Eigen::Success, errc::numeric,
            "companion eigenvalue iteration failed to converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      roots.push_back(solver.eigenvalues()(i));
  }

  // Aberth-Ehrlich refinement against the untrimmed polynomial.
  const std::size_t m = roots.size();
  for (int iter = 0; iter < opt.polish_max_iter; ++iter) {
    double worst = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx zi = roots[i];
      const cplx pv = polynomial_value(p, zi);
      const cplx dv = polynomial_derivative(p, zi);
      if (pv == cplx(0.0)) continue;
      cplx newton = (dv == cplx(0.0)) ? cplx(opt.polish_tol) : pv / dv;
      cplx repel = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        const cplx diff = zi - roots[j];
        if (abs1(diff) > 1e-300) repel += 1.0 / diff;
      }
      const cplx denom = 1.0 - newton * repel;
      const cplx step = (abs1(denom) > 1e-300) ? newton / denom : newton;
      roots[i] = zi - step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(roots[i])));
    }
    if (worst < opt.polish_tol) break;
  }
  return roots;
}

}  // namespace nft
