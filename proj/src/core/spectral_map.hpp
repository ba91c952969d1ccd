// Moebius map between the spectral parameter rho (closed upper half-plane)
// and the unit-disk variable z = (1/2 + i rho) / (1/2 - i rho).
#pragma once

#include "core/grid.hpp"

namespace nft {

struct SpectralPoint {
  cplx rho;
  cplx z;
  cplx z_tilde;  // 1/z image; infinite at rho = i/2
  // z + 1 = 1/(1/2 - i rho) and z~ + 1 = 1/(1/2 + i rho), kept in this form
  // because the additions cancel badly near z = -1 (large |rho|)
  cplx z_plus_one;
  cplx z_tilde_plus_one;
};

/// Throws errc::pole at rho = -i/2.
SpectralPoint rho_to_z(cplx rho);

/// Inverse map rho = (z - 1) / (2 i (z + 1)).
cplx z_to_rho(cplx z);

/// Inverse map using the stable z + 1 of the point.
cplx z_to_rho(const SpectralPoint& p);

}  // namespace nft
