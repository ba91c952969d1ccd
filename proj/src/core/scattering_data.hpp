// The scattering data set: a, b on a real rho grid plus eigenvalues and
// norming constants, with JSON round-trip at full floating precision.
#pragma once

#include <string>
#include <vector>

#include "core/grid.hpp"

namespace nft {

struct ScatteringMeta {
  int order = 0;              // series truncation used by the direct stage
  double nodes_per_unit = 0;  // spatial grid density
  double x_min = 0, x_max = 0;
  double time = 0;
  double unitarity_defect = 0;  // max | |a|^2 + |b|^2 - 1 | over the rho grid
};

struct ScatteringData {
  std::vector<double> rho;
  std::vector<cplx> a, b;
  std::vector<cplx> eigenvalues;
  std::vector<cplx> norming_constants;
  ScatteringMeta meta;

  std::size_t sample_count() const noexcept { return rho.size(); }
  std::size_t eigenvalue_count() const noexcept { return eigenvalues.size(); }

  double unitarity_defect() const;

  /// Structural invariants: matching lengths, eigenvalues in the upper
  /// half-plane, nonzero norming constants.
  void check() const;
};

std::string scattering_to_json(const ScatteringData& sd);
ScatteringData scattering_from_json(const std::string& text);

void save_scattering(const ScatteringData& sd, const std::string& path);
ScatteringData load_scattering(const std::string& path);

}  // namespace nft
