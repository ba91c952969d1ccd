#include "core/oracles.hpp"

#include <cmath>
#include <numbers>

namespace nft {
namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

// 1/Gamma, entire; returns 0 at the poles of Gamma. Keeps the closed-form
// a(rho) finite when a Gamma pole in the denominator annihilates it.
cplx reciprocal_gamma(cplx w);

}  // namespace

cplx gamma_function(cplx w) {
  require(!is_nonpositive_integer(w), errc::pole,
          "Gamma has poles at non-positive integers");
  const double pi = std::numbers::pi;
  if (w.real() < 0.5) {
    // reflection: Gamma(w) = pi / (sin(pi w) Gamma(1 - w))
    return pi / (std::sin(pi * w) * gamma_function(1.0 - w));
  }
  const cplx z = w - 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

namespace {

cplx reciprocal_gamma(cplx w) {
  if (is_nonpositive_integer(w)) return 0.0;
  if (w.real() < 0.5) {
    // 1/Gamma(w) = sin(pi w) Gamma(1 - w) / pi
    return std::sin(std::numbers::pi * w) * gamma_function(1.0 - w) / std::numbers::pi;
  }
  return 1.0 / gamma_function(w);
}

}  // namespace

cplx ChirpedSechParams::T() const {
  return std::sqrt(cplx(gamma * gamma / 4.0 - 1.0, 0.0));
}

cplx ChirpedSechParams::omega(cplx rho) const {
  return cplx(0.0, -1.0) * rho - cplx(0.0, 0.5) * A * gamma + 0.5;
}

cplx ChirpedSechParams::omega_plus() const {
  return cplx(0.0, -1.0) * A * (T() + gamma / 2.0);
}

cplx ChirpedSechParams::omega_minus() const {
  return cplx(0.0, 1.0) * A * (T() - gamma / 2.0);
}

int ChirpedSechParams::eigenvalue_count() const {
  return static_cast<int>(std::floor(0.5 + A * std::abs(T())));
}

cplx ChirpedSechParams::eigenvalue(int m) const {
  require(m >= 1 && m <= eigenvalue_count(), errc::domain,
          "eigenvalue index out of range");
  return A * T() - cplx(0.0, 1.0) * (m - 0.5);
}

cplx analytic_a_chirped_sech(const ChirpedSechParams& p, cplx rho) {
  const cplx w = p.omega(rho);
  const cplx wp = p.omega_plus(), wm = p.omega_minus();
  return gamma_function(w) * gamma_function(w - wm - wp) * reciprocal_gamma(w - wp) *
         reciprocal_gamma(w - wm);
}

cplx analytic_b_chirped_sech(const ChirpedSechParams& p, cplx rho) {
  const cplx w = p.omega(rho);
  const cplx wp = p.omega_plus(), wm = p.omega_minus();
  const cplx chirp = std::pow(cplx(2.0, 0.0), cplx(0.0, -p.gamma * p.A));
  return cplx(0.0, 1.0) / p.A * chirp * gamma_function(w) *
         gamma_function(1.0 - w + wm + wp) / (gamma_function(wp) * gamma_function(wm));
}

cplx analytic_norming_chirped_sech(const ChirpedSechParams& p, int m) {
  return analytic_b_chirped_sech(p, p.eigenvalue(m));
}

cplx soliton_solution(double alpha, double beta, double delta, double theta, double x,
                      double t) {
  const double arg = 2.0 * beta * x + 8.0 * alpha * beta * t - delta;
  const double e = std::exp(-std::abs(arg));
  const double sech = 2.0 * e / (1.0 + e * e);
  const double phase = -2.0 * alpha * x - 4.0 * (alpha * alpha - beta * beta) * t - theta;
  return 2.0 * beta * sech * std::polar(1.0, phase);
}

}  // namespace nft
