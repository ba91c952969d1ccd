#include "core/spline.hpp"

#include <algorithm>
#include <cmath>

namespace nft {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<cplx> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  require(n == y_.size(), errc::invalid_grid, "spline: knot/value count mismatch");
  require(n >= 5, errc::invalid_grid, "spline: need at least 5 knots");
  for (std::size_t i = 0; i + 1 < n; ++i)
    require(x_[i] < x_[i + 1], errc::invalid_grid, "spline: knots must increase strictly");

  // Moment equations  mu_j M_{j-1} + 2 M_j + lam_j M_{j+1} = d_j,  j = 1..n-2,
  // with the boundary moments eliminated through the not-a-knot conditions
  //   M_0     = aL M_1     + bL M_2,
  //   M_{n-1} = aR M_{n-2} + bR M_{n-3}.
  const std::size_t m = n - 2;  // unknowns M_1..M_{n-2}
  std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0);
  std::vector<cplx> rhs(m);

  auto h = [&](std::size_t j) { return x_[j + 1] - x_[j]; };
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double hl = h(j - 1), hr = h(j);
    const double mu = hl / (hl + hr), lam = hr / (hl + hr);
    const cplx d = 6.0 * ((y_[j + 1] - y_[j]) / hr - (y_[j] - y_[j - 1]) / hl) / (hl + hr);
    const std::size_t r = j - 1;
    diag[r] = 2.0;
    if (r > 0) lower[r] = mu;
    if (r + 1 < m) upper[r] = lam;
    rhs[r] = d;
    if (j == 1) {
      const double aL = (h(0) + h(1)) / h(1), bL = -h(0) / h(1);
      diag[r] += mu * aL;
      if (m > 1) upper[r] += mu * bL;
    }
    if (j == n - 2) {
      const double aR = (h(n - 2) + h(n - 3)) / h(n - 3), bR = -h(n - 2) / h(n - 3);
      diag[r] += lam * aR;
      if (r > 0) lower[r] += lam * bR;
    }
  }

  // Thomas elimination
  std::vector<cplx> sol(m);
  std::vector<double> cp(m, 0.0);
  std::vector<cplx> dp(m);
  cp[0] = upper[0] / diag[0];
  dp[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < m; ++i) {
    const double w = diag[i] - lower[i] * cp[i - 1];
    cp[i] = (i + 1 < m) ? upper[i] / w : 0.0;
    dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / w;
  }
  sol[m - 1] = dp[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) sol[i] = dp[i] - cp[i] * sol[i + 1];

  m_.assign(n, cplx(0.0));
  for (std::size_t i = 0; i < m; ++i) m_[i + 1] = sol[i];
  {
    const double aL = (h(0) + h(1)) / h(1), bL = -h(0) / h(1);
    m_[0] = aL * m_[1] + bL * m_[2];
    const double aR = (h(n - 2) + h(n - 3)) / h(n - 3), bR = -h(n - 2) / h(n - 3);
    m_[n - 1] = aR * m_[n - 2] + bR * m_[n - 3];
  }
}

std::size_t CubicSpline::interval(double x) const {
  require(x >= x_.front() - 1e-12 * (1.0 + std::abs(x_.front())) &&
              x <= x_.back() + 1e-12 * (1.0 + std::abs(x_.back())),
          errc::domain, "spline: evaluation point outside knot range");
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t j = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(j, x_.size() - 2);
}

cplx CubicSpline::operator()(double x) const {
  const std::size_t j = interval(x);
  const double hj = x_[j + 1] - x_[j];
  const double a = x_[j + 1] - x, b = x - x_[j];
  return m_[j] * (a * a * a) / (6.0 * hj) + m_[j + 1] * (b * b * b) / (6.0 * hj) +
         (y_[j] - m_[j] * hj * hj / 6.0) * (a / hj) +
         (y_[j + 1] - m_[j + 1] * hj * hj / 6.0) * (b / hj);
}

cplx CubicSpline::derivative(double x) const {
  const std::size_t j = interval(x);
  const double hj = x_[j + 1] - x_[j];
  const double a = x_[j + 1] - x, b = x - x_[j];
  return -m_[j] * (a * a) / (2.0 * hj) + m_[j + 1] * (b * b) / (2.0 * hj) +
         (y_[j + 1] - y_[j]) / hj - (m_[j + 1] - m_[j]) * hj / 6.0;
}

std::vector<cplx> CubicSpline::derivatives_at_knots() const {
  const std::size_t n = x_.size();
  std::vector<cplx> d(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double hj = x_[j + 1] - x_[j];
    d[j] = (y_[j + 1] - y_[j]) / hj - hj * (2.0 * m_[j] + m_[j + 1]) / 6.0;
  }
  const double hl = x_[n - 1] - x_[n - 2];
  d[n - 1] = (y_[n - 1] - y_[n - 2]) / hl + hl * (2.0 * m_[n - 1] + m_[n - 2]) / 6.0;
  return d;
}

GridFunction spline_derivative(const GridFunction& fn) {
  require(fn.size() >= 5, errc::invalid_grid, "spline_derivative: need at least 5 points");
  CubicSpline s(fn.grid.points(), fn.values);
  return GridFunction(fn.grid, s.derivatives_at_knots());
}

}  // namespace nft
