#include "core/quadrature.hpp"

#include <array>
#include <cmath>

namespace nft {
namespace {

// Weight tables are prepared in extended precision; the alternating Lagrange
// coefficients cancel heavily and plain double loses ~2 digits there.
using Poly = std::array<long double, 6>;  // coefficients in ascending powers

// Lagrange basis polynomials for nodes {0,1,2,3,4,5}.
std::array<Poly, 6> lagrange_basis() {
  std::array<Poly, 6> basis{};
  for (int j = 0; j < 6; ++j) {
    Poly p{};
    p[0] = 1.0L;
    int deg = 0;
    long double denom = 1.0L;
    for (int k = 0; k < 6; ++k) {
      if (k == j) continue;
      // multiply p by (tau - k)
      for (int m = deg + 1; m > 0; --m) p[m] = p[m - 1] - k * p[m];
      p[0] *= -k;
      ++deg;
      denom *= (j - k);
    }
    for (long double& c : p) c /= denom;
    basis[j] = p;
  }
  return basis;
}

// W[i][j] = int_0^i l_j(tau) dtau
std::array<std::array<double, 6>, 7> cumulative_weight_table() {
  std::array<std::array<double, 6>, 7> w{};
  const auto basis = lagrange_basis();
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j < 6; ++j) {
      long double s = 0;
      long double ipow = i;
      for (int m = 0; m < 6; ++m) {
        s += basis[j][m] * ipow / (m + 1);
        ipow *= i;
      }
      w[i][j] = static_cast<double>(s);
    }
  }
  return w;
}

const std::array<std::array<double, 6>, 7>& cum_weights() {
  static const auto table = cumulative_weight_table();
  return table;
}

// mu_r(c) = int_0^c exp(-h s) s^r ds, r = 0..5
std::array<long double, 6> exp_moments(long double c, long double h) {
  std::array<long double, 6> mu{};
  if (c == 0.0L) return mu;
  if (h * c <= 1.0L) {
    // series: c^{r+1} sum_s (-hc)^s / (s! (r+s+1))
    for (int r = 0; r <= 5; ++r) {
      long double term = 1.0L;  // (-hc)^s / s!
      long double sum = 0.0L;
      for (int s = 0; s < 48; ++s) {
        const long double add = term / (r + s + 1);
        sum += add;
        if (std::abs(add) < 1e-22L * std::abs(sum)) break;
        term *= -h * c / (s + 1);
      }
      mu[r] = std::pow(c, static_cast<long double>(r + 1)) * sum;
    }
  } else {
    const long double e = std::exp(-h * c);
    mu[0] = -std::expm1(-h * c) / h;
    long double cp = 1.0L;
    for (int r = 1; r <= 5; ++r) {
      cp *= c;
      mu[r] = (r * mu[r - 1] - cp * e) / h;
    }
  }
  return mu;
}

long double binom(int n, int k) {
  long double r = 1.0L;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// EWR[i][j] = int_i^5 exp(-h (tau - i)) l_j(tau) dtau, for the grid spacing h.
std::array<std::array<double, 6>, 6> exp_right_weights(double h) {
  std::array<std::array<double, 6>, 6> w{};
  const auto basis = lagrange_basis();
  for (int i = 0; i <= 5; ++i) {
    const auto mu = exp_moments(5.0L - i, static_cast<long double>(h));
    for (int j = 0; j < 6; ++j) {
      // int_i^5 e^{-h(tau-i)} tau^m dtau = sum_r C(m,r) i^{m-r} mu_r(5-i)
      long double s = 0;
      for (int m = 0; m < 6; ++m) {
        long double acc = 0;
        for (int r = 0; r <= m; ++r) {
          const long double ip =
              (m == r) ? 1.0L : std::pow(static_cast<long double>(i),
                                         static_cast<long double>(m - r));
          acc += binom(m, r) * ip * mu[r];
        }
        s += basis[j][m] * acc;
      }
      w[i][j] = static_cast<double>(s);
    }
  }
  return w;
}

struct CompensatedSum {
  double sr = 0, si = 0, cr = 0, ci = 0;
  static void neumaier(double& s, double& c, double v) {
    double t = s + v;
    c += (std::abs(s) >= std::abs(v)) ? (s - t) + v : (v - t) + s;
    s = t;
  }
  void add(cplx v) {
    neumaier(sr, cr, v.real());
    neumaier(si, ci, v.imag());
  }
  cplx value() const { return {sr + cr, si + ci}; }
};

void check_panels(const GridFunction& fn) {
  require(fn.size() >= 6, errc::invalid_grid, "quadrature requires at least 6 points");
}

}  // namespace

cplx integrate(const GridFunction& fn) {
  check_panels(fn);
  const auto& w = cum_weights();
  const double h = fn.grid.spacing();
  CompensatedSum acc;
  for (std::size_t p = 0; p + 5 < fn.size(); p += 5) {
    cplx panel = 0.0;
    for (int j = 0; j < 6; ++j) panel += w[5][j] * fn[p + j];
    acc.add(h * panel);
  }
  return acc.value();
}

GridFunction cumulative_from_left(const GridFunction& fn) {
  check_panels(fn);
  const auto& w = cum_weights();
  const double h = fn.grid.spacing();
  GridFunction out = GridFunction::zero(fn.grid);
  CompensatedSum base;
  for (std::size_t p = 0; p + 5 < fn.size(); p += 5) {
    const cplx b = base.value();
    for (int i = 1; i <= 5; ++i) {
      cplx s = 0.0;
      for (int j = 0; j < 6; ++j) s += w[i][j] * fn[p + j];
      out[p + i] = b + h * s;
    }
    cplx panel = 0.0;
    for (int j = 0; j < 6; ++j) panel += w[5][j] * fn[p + j];
    base.add(h * panel);
  }
  return out;
}

GridFunction cumulative_from_right(const GridFunction& fn) {
  check_panels(fn);
  const auto& w = cum_weights();
  const double h = fn.grid.spacing();
  GridFunction out = GridFunction::zero(fn.grid);
  CompensatedSum base;
  const std::size_t n = fn.size();
  for (std::size_t p = n - 1; p >= 5; p -= 5) {
    const std::size_t lo = p - 5;
    const cplx b = base.value();
    for (int i = 4; i >= 0; --i) {
      cplx s = 0.0;
      for (int j = 0; j < 6; ++j) s += (w[5][j] - w[i][j]) * fn[lo + j];
      out[lo + i] = b + h * s;
    }
    cplx panel = 0.0;
    for (int j = 0; j < 6; ++j) panel += w[5][j] * fn[lo + j];
    base.add(h * panel);
  }
  return out;
}

GridFunction exp_cumulative_from_right(const GridFunction& fn) {
  check_panels(fn);
  const double h = fn.grid.spacing();
  const auto ewr = exp_right_weights(h);
  GridFunction out = GridFunction::zero(fn.grid);
  const std::size_t n = fn.size();
  // E(x_i) = h sum_j EWR[i][j] v_j + exp(-h (5-i)) E(panel end)
  for (std::size_t p = n - 1; p >= 5; p -= 5) {
    const std::size_t lo = p - 5;
    const cplx tail = out[lo + 5];
    for (int i = 4; i >= 0; --i) {
      cplx s = 0.0;
      for (int j = 0; j < 6; ++j) s += ewr[i][j] * fn[lo + j];
      out[lo + i] = h * s + std::exp(-h * (5 - i)) * tail;
    }
  }
  return out;
}

GridFunction exp_cumulative_from_left(const GridFunction& fn) {
  check_panels(fn);
  const double h = fn.grid.spacing();
  const auto ewr = exp_right_weights(h);
  GridFunction out = GridFunction::zero(fn.grid);
  // By node symmetry EWL[i][j] = EWR[5-i][5-j].
  for (std::size_t p = 0; p + 5 < fn.size(); p += 5) {
    const cplx head = out[p];
    for (int i = 1; i <= 5; ++i) {
      cplx s = 0.0;
      for (int j = 0; j < 6; ++j) s += ewr[5 - i][5 - j] * fn[p + j];
      out[p + i] = h * s + std::exp(-h * i) * head;
    }
  }
  return out;
}

}  // namespace nft
