// Recurrent computation of the power-series coefficient tables {a_n}, {b_n}
// for the Jost solutions, conjugation relations for the tilded companions,
// and truncated-series evaluation at arbitrary spectral points.
//
// The recurrences integrate products against the exponential kernels
// exp(x-t) / exp(t-x), keeping every intermediate bounded on wide domains.
#pragma once

#include <array>
#include <vector>

#include "core/spectral_map.hpp"
#include "core/zs_base.hpp"

namespace nft {

using Vec2 = std::array<cplx, 2>;

enum class JostKind { phi, psi, phi_tilde, psi_tilde };

struct SppsBuildOptions {
  int order = 160;               // highest coefficient index N
  double base_floor = 1e-12;     // smallest allowed |f|, |g|
  double overflow_limit = 1e120; // instability guard on row magnitudes
  bool store_all_columns = false;
  std::vector<double> probe_x;   // extra stored abscissae; x=0 and the
                                 // endpoints are always kept
};

/// Coefficient rows n = 0..N sampled at a set of stored grid columns.
class SppsTable {
 public:
  int order() const noexcept { return order_; }
  const UniformGrid& grid() const noexcept { return grid_; }
  const std::vector<std::size_t>& columns() const noexcept { return columns_; }

  /// Slot of a stored grid index; errc::domain if the column is not stored.
  std::size_t column_slot(std::size_t grid_index) const;
  std::size_t origin_slot() const { return column_slot(grid_.nearest_index(0.0)); }

  cplx a1(int n, std::size_t slot) const { return at(a1_, n, slot); }
  cplx a2(int n, std::size_t slot) const { return at(a2_, n, slot); }
  cplx b1(int n, std::size_t slot) const { return at(b1_, n, slot); }
  cplx b2(int n, std::size_t slot) const { return at(b2_, n, slot); }
  cplx a1_prime(int n, std::size_t slot) const { return at(a1p_, n, slot); }
  cplx b2_prime(int n, std::size_t slot) const { return at(b2p_, n, slot); }

  /// Largest modulus over the stored columns of row n (both components).
  double row_max_abs(int n) const;

  friend SppsTable build_table(const GridFunction& q, const BaseJost& base,
                               const ZerothCoefficients& zeroth,
                               const SppsBuildOptions& opt);

 private:
  cplx at(const std::vector<cplx>& store, int n, std::size_t slot) const;

  UniformGrid grid_ = UniformGrid::with_count(0.0, 1.0, 6);
  int order_ = 0;
  std::vector<std::size_t> columns_;
  std::vector<cplx> a1_, a2_, b1_, b2_, a1p_, b2p_;  // row-major [n][slot]
};

/// Fills rows 1..N from the recurrences; row 0 copies the zeroth coefficients.
SppsTable build_table(const GridFunction& q, const BaseJost& base,
                      const ZerothCoefficients& zeroth, const SppsBuildOptions& opt);

/// Tilded coefficients of row n via the conjugation relations, aligned with
/// table.columns().
struct TildedRow {
  std::vector<cplx> a1t, a2t, b1t, b2t;
};
TildedRow tilded_row(const SppsTable& table, int n);

/// Truncated series value of the requested Jost solution at a stored column.
Vec2 evaluate_jost(const SppsTable& table, const SpectralPoint& point, JostKind which,
                   std::size_t grid_index);

/// Debug dump of the stored columns as CSV rows
/// (x, n, re/im of a1, a2, b1, b2).
void dump_table_csv(const SppsTable& table, const std::string& path);

}  // namespace nft
