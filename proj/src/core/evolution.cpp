#include "core/evolution.hpp"

#include <cmath>

namespace nft {

ScatteringData evolve(const ScatteringData& sd, double dt) {
  ScatteringData out = sd;
  for (std::size_t k = 0; k < out.rho.size(); ++k) {
    const double r = out.rho[k];
    // real rho: pure phase 4 r^2 dt
    out.b[k] *= std::polar(1.0, 4.0 * r * r * dt);
  }
  for (std::size_t m = 0; m < out.eigenvalues.size(); ++m) {
    const cplx rho = out.eigenvalues[m];
    out.norming_constants[m] *= std::exp(cplx(0.0, 4.0) * rho * rho * dt);
  }
  out.meta.time += dt;
  out.meta.unitarity_defect = out.unitarity_defect();
  return out;
}

}  // namespace nft
