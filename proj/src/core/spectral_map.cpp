#include "core/spectral_map.hpp"

#include <cmath>
#include <limits>

namespace nft {

SpectralPoint rho_to_z(cplx rho) {
  const cplx irho = cplx(0.0, 1.0) * rho;
  const cplx num = 0.5 + irho;
  const cplx den = 0.5 - irho;
  require(std::abs(den) > 1e-15 * (1.0 + std::abs(rho)), errc::pole,
          "rho = -i/2 is a pole of the spectral map");
  SpectralPoint p;
  p.rho = rho;
  p.z = num / den;
  p.z_plus_one = 1.0 / den;  // num + den = 1
  if (std::abs(num) == 0.0) {
    p.z_tilde = cplx(std::numeric_limits<double>::infinity(), 0.0);
    p.z_tilde_plus_one = p.z_tilde;
  } else {
    p.z_tilde = den / num;
    p.z_tilde_plus_one = 1.0 / num;
  }
  return p;
}

cplx z_to_rho(cplx z) {
  return (z - 1.0) / (cplx(0.0, 2.0) * (z + 1.0));
}

cplx z_to_rho(const SpectralPoint& p) {
  return (p.z - 1.0) / (cplx(0.0, 2.0) * p.z_plus_one);
}

}  // namespace nft
