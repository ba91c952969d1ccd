// Time evolution of scattering data: a is invariant, b and the norming
// constants pick up the phase exp(4 i rho^2 t).
#pragma once

#include "core/scattering_data.hpp"

namespace nft {

/// Advances the data by dt: b_k *= exp(4 i rho_k^2 dt), c_m *= exp(4 i rho_m^2 dt),
/// meta.time += dt. Repeated application composes additively in time.
ScatteringData evolve(const ScatteringData& sd, double dt);

}  // namespace nft
