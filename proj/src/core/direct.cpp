#include "core/direct.hpp"

#include <algorithm>
#include <cmath>

#include "core/polyroots.hpp"
#include "core/threading.hpp"

namespace nft {
namespace {

// (z+1) P(z) as a coefficient vector.
std::vector<cplx> shift_mul(const std::vector<cplx>& p) {
  std::vector<cplx> out(p.size() + 1, cplx(0.0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i];
    out[i + 1] += p[i];
  }
  return out;
}

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

std::vector<double> log_spaced_rho_grid(const RhoGridSpec& spec) {
  require(spec.count >= 2, errc::configuration, "rho grid needs at least 2 samples");
  require(spec.rho_min > 0 && spec.rho_max > spec.rho_min, errc::configuration,
          "rho grid requires 0 < rho_min < rho_max");
  const std::size_t half = (spec.count + 1) / 2;
  const double lo = std::log10(spec.rho_min), hi = std::log10(spec.rho_max);
  std::vector<double> rho(2 * half);
  for (std::size_t i = 0; i < half; ++i) {
    const double alpha = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(half - 1);
    const double r = std::pow(10.0, alpha);
    rho[half + i] = r;
    rho[half - 1 - i] = -r;
  }
  return rho;
}

SppsPolynomials polynomials_at_origin(const SppsTable& table) {
  const std::size_t slot = table.origin_slot();
  const int N = table.order();
  SppsPolynomials p;
  p.order = N;
  p.b1.resize(N + 1);
  p.a2.resize(N + 1);
  p.b2.resize(N + 1);
  p.a1.resize(N + 1);
  double sign = 1.0;
  for (int n = 0; n <= N; ++n, sign = -sign) {
    p.b1[n] = sign * table.b1(n, slot);
    p.a2[n] = sign * table.a2(n, slot);
    p.b2[n] = sign * table.b2(n, slot);
    p.a1[n] = sign * table.a1(n, slot);
  }
  return p;
}

cplx evaluate_a(const SppsPolynomials& polys, const SpectralPoint& point) {
  const cplx z = point.z;
  require(std::abs(z) <= 1.0 + 1e-9, errc::domain,
          "a(rho) is defined for rho in the closed upper half-plane");
  const cplx w = point.z_plus_one;
  return (1.0 + w * polynomial_value(polys.b1, z)) *
             (1.0 + w * polynomial_value(polys.a2, z)) -
         w * w * polynomial_value(polys.b2, z) * polynomial_value(polys.a1, z);
}

cplx evaluate_b(const SppsPolynomials& polys, const SpectralPoint& point) {
  require(std::abs(point.rho.imag()) <= 1e-12 * (1.0 + std::abs(point.rho)), errc::domain,
          "b(rho) is defined on the real line");
  const cplx z = point.z;
  const cplx w = point.z_plus_one;
  // Conjugated-coefficient polynomials at conj(z) equal conj(P(z)) on |z| = 1.
  return w * polynomial_value(polys.b2, z) *
             (1.0 + std::conj(w * polynomial_value(polys.a2, z))) +
         std::conj(w * polynomial_value(polys.a1, z)) *
             (1.0 + w * polynomial_value(polys.b1, z));
}

std::vector<cplx> a_polynomial(const SppsPolynomials& polys) {
  std::vector<cplx> p1 = shift_mul(polys.b1);
  p1[0] += 1.0;
  std::vector<cplx> p2 = shift_mul(polys.a2);
  p2[0] += 1.0;
  const std::vector<cplx> q1 = shift_mul(polys.b2);
  const std::vector<cplx> q2 = shift_mul(polys.a1);
  std::vector<cplx> out = convolve(p1, p2);
  const std::vector<cplx> sub = convolve(q1, q2);
  for (std::size_t i = 0; i < sub.size(); ++i) out[i] -= sub[i];
  return out;
}

NormingQuotients norming_quotients(const SppsPolynomials& polys, cplx z) {
  require(std::abs(z) < 1.0, errc::domain, "norming constants need |z| < 1");
  const cplx w = z + 1.0;
  const cplx phi1 = 1.0 + w * polynomial_value(polys.b1, z);
  const cplx phi2 = w * polynomial_value(polys.b2, z);
  const cplx psi1 = w * polynomial_value(polys.a1, z);
  const cplx psi2 = 1.0 + w * polynomial_value(polys.a2, z);
  const double floor = 1e-14;
  require(std::abs(psi1) > floor || std::abs(psi2) > floor, errc::degenerate_eigenvector,
          "both norming-quotient denominators vanish");
  NormingQuotients q;
  q.first = phi1 / psi1;
  q.second = phi2 / psi2;
  q.chosen = (std::abs(psi1) >= std::abs(psi2)) ? q.first : q.second;
  q.gap = std::abs(q.first - q.second);
  return q;
}

std::vector<DiscreteEigenvalue> find_eigenvalues(const SppsPolynomials& polys,
                                                 const EigenvalueFilterOptions& opt) {
  const std::vector<cplx> poly = a_polynomial(polys);
  const std::vector<cplx> roots = polynomial_roots(poly);

  double circle_max = 0;
  for (int k = 0; k < 720; ++k) {
    const double th = 2.0 * M_PI * k / 720.0;
    circle_max = std::max(circle_max,
                          std::abs(polynomial_value(poly, std::polar(1.0, th))));
  }
  if (circle_max == 0) return {};

  std::vector<DiscreteEigenvalue> hits;
  for (const cplx& z : roots) {
    if (std::abs(z) > 1.0 - opt.disk_margin) continue;
    const double residual = std::abs(polynomial_value(poly, z)) / circle_max;
    if (residual > opt.residual_tol) continue;
    NormingQuotients q;
    try {
      q = norming_quotients(polys, z);
    } catch (const error&) {
      continue;  // degenerate quotient: reject as spurious
    }
    if (q.gap > opt.quotient_tol * std::max(1.0, std::abs(q.chosen))) continue;
    bool duplicate = false;
    for (const auto& h : hits) {
      if (std::abs(h.z - z) < 1e-9) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    DiscreteEigenvalue ev;
    ev.z = z;
    ev.rho = z_to_rho(z);
    ev.norming_constant = q.chosen;
    ev.residual = residual;
    ev.quotient_gap = q.gap;
    hits.push_back(ev);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& l, const auto& r) {
    if (l.rho.imag() != r.rho.imag()) return l.rho.imag() > r.rho.imag();
    return l.rho.real() < r.rho.real();
  });
  return hits;
}

ScatteringData run_direct(const GridFunction& q, const DirectOptions& opt) {
  const BaseJost base = solve_base(q, opt.base);
  const ZerothCoefficients zeroth = zeroth_coefficients(base, q);
  SppsBuildOptions build_opt;
  build_opt.order = opt.order;
  build_opt.probe_x = opt.probe_x;
  const SppsTable table = build_table(q, base, zeroth, build_opt);
  const SppsPolynomials polys = polynomials_at_origin(table);

  ScatteringData sd;
  sd.rho = log_spaced_rho_grid(opt.rho);
  sd.a.resize(sd.rho.size());
  sd.b.resize(sd.rho.size());
  parallel_for(sd.rho.size(), [&](std::size_t k) {
    const SpectralPoint pt = rho_to_z(cplx(sd.rho[k], 0.0));
    sd.a[k] = evaluate_a(polys, pt);
    sd.b[k] = evaluate_b(polys, pt);
  });

  for (const DiscreteEigenvalue& ev : find_eigenvalues(polys, opt.filter)) {
    sd.eigenvalues.push_back(ev.rho);
    sd.norming_constants.push_back(ev.norming_constant);
  }

  sd.meta.order = opt.order;
  sd.meta.nodes_per_unit = q.grid.nodes_per_unit();
  sd.meta.x_min = q.grid.x_min();
  sd.meta.x_max = q.grid.x_max();
  sd.meta.time = 0.0;
  sd.meta.unitarity_defect = sd.unitarity_defect();
  return sd;
}

ScatteringData run_direct(const PotentialSpec& spec, const DirectOptions& opt) {
  spec.check();
  double lo, hi;
  if (opt.domain) {
    lo = opt.domain->first;
    hi = opt.domain->second;
    require(lo < hi, errc::configuration, "domain override requires x_min < x_max");
  } else {
    const TruncatedDomain dom = select_domain(spec, opt.tail_threshold);
    lo = dom.x_min;
    hi = dom.x_max;
  }
  const UniformGrid grid = UniformGrid::with_density(lo, hi, opt.nodes_per_unit);
  return run_direct(evaluate(spec, grid), opt);
}

}  // namespace nft
