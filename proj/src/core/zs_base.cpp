#include "core/zs_base.hpp"

#include <algorithm>
#include <cmath>

#include "core/quadrature.hpp"

namespace nft {
namespace {

GridFunction product(const GridFunction& a, const GridFunction& b) {
  GridFunction out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

}  // namespace

BaseJost solve_base(const GridFunction& q, const BaseSolveOptions& opt) {
  const std::size_t n = q.size();
  require(n >= 6, errc::invalid_grid, "solve_base: grid too short");

  GridFunction qbar = q;
  for (std::size_t i = 0; i < n; ++i) qbar[i] = std::conj(q[i]);

  GridFunction u = GridFunction::zero(q.grid);
  GridFunction f(q.grid, std::vector<cplx>(n, cplx(1.0)));
  GridFunction v = GridFunction::zero(q.grid);
  GridFunction g(q.grid, std::vector<cplx>(n, cplx(1.0)));

  double update = 0;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    // psi side: u(x) = -int_x^X e^{x-t} q f dt,  f(x) = 1 + int_x^X conj(q) u dt
    GridFunction u_next = exp_cumulative_from_right(product(q, f));
    for (std::size_t i = 0; i < n; ++i) u_next[i] = -u_next[i];
    GridFunction f_next = cumulative_from_right(product(qbar, u_next));
    for (std::size_t i = 0; i < n; ++i) f_next[i] += 1.0;

    // phi side: v(x) = -int_X^x e^{t-x} conj(q) g dt,  g(x) = 1 + int_X^x q v dt
    GridFunction v_next = exp_cumulative_from_left(product(qbar, g));
    for (std::size_t i = 0; i < n; ++i) v_next[i] = -v_next[i];
    GridFunction g_next = cumulative_from_left(product(q, v_next));
    for (std::size_t i = 0; i < n; ++i) g_next[i] += 1.0;

    update = std::max(std::max(max_abs_diff(u_next, u), max_abs_diff(f_next, f)),
                      std::max(max_abs_diff(v_next, v), max_abs_diff(g_next, g)));
    u = std::move(u_next);
    f = std::move(f_next);
    v = std::move(v_next);
    g = std::move(g_next);
    if (update < opt.tolerance) break;
  }
  require(update < opt.tolerance, errc::base_solve,
          "base Jost iteration did not converge; final update " + std::to_string(update));

  GridFunction f_prime = GridFunction::zero(q.grid);
  GridFunction g_prime = GridFunction::zero(q.grid);
  for (std::size_t i = 0; i < n; ++i) {
    f_prime[i] = -qbar[i] * u[i];
    g_prime[i] = q[i] * v[i];
  }
  return BaseJost{std::move(f), std::move(f_prime), std::move(g), std::move(g_prime),
                  std::move(u), std::move(v), iter + 1, update};
}

ZerothCoefficients zeroth_coefficients(const BaseJost& base, const GridFunction& q) {
  require(base.f.grid == q.grid, errc::invalid_grid, "zeroth_coefficients: grid mismatch");
  const std::size_t n = q.size();
  GridFunction a10 = base.psi1_scaled;
  GridFunction a20 = base.f;
  GridFunction b10 = base.g;
  GridFunction b20 = base.phi2_scaled;
  GridFunction a10p = GridFunction::zero(q.grid);
  GridFunction b20p = GridFunction::zero(q.grid);
  for (std::size_t i = 0; i < n; ++i) {
    a20[i] -= 1.0;
    b10[i] -= 1.0;
    // a10' = a10 + q (a20 + 1);  b20' = -b20 - conj(q) (b10 + 1)
    a10p[i] = a10[i] + q[i] * base.f[i];
    b20p[i] = -b20[i] - std::conj(q[i]) * base.g[i];
  }
  return ZerothCoefficients{std::move(a10), std::move(a20), std::move(b10),
                            std::move(b20), std::move(a10p), std::move(b20p)};
}

}  // namespace nft
