// Uniform grids and complex-valued functions tabulated on them.
//
// Grids always contain 5*m+1 points so that composite 6-point Newton-Cotes
// panels tile the interval exactly.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace nft {

using cplx = std::complex<double>;

class UniformGrid {
 public:
  /// Grid with at least `nodes_per_unit` nodes per unit length; the interval
  /// count is rounded up to a multiple of 5.
  static UniformGrid with_density(double x_min, double x_max, double nodes_per_unit);

  /// Grid with an explicit point count (must be 1 mod 5, at least 6).
  static UniformGrid with_count(double x_min, double x_max, std::size_t count);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double spacing() const noexcept { return h_; }
  double nodes_per_unit() const noexcept { return nodes_per_unit_; }
  std::size_t count() const noexcept { return count_; }
  std::size_t panel_count() const noexcept { return (count_ - 1) / 5; }

  double x(std::size_t i) const noexcept { return x_min_ + h_ * static_cast<double>(i); }
  std::vector<double> points() const;

  /// Index of the grid node closest to `x0`.
  std::size_t nearest_index(double x0) const noexcept;

  friend bool operator==(const UniformGrid& a, const UniformGrid& b) noexcept {
    return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.count_ == b.count_;
  }

 private:
  UniformGrid(double x_min, double x_max, std::size_t count);

  double x_min_ = 0;
  double x_max_ = 0;
  double h_ = 0;
  double nodes_per_unit_ = 0;
  std::size_t count_ = 0;
};

/// A complex function sampled on a uniform grid.
struct GridFunction {
  UniformGrid grid;
  std::vector<cplx> values;

  GridFunction(UniformGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    require(values.size() == grid.count(), errc::invalid_grid,
            "sample count does not match grid");
  }

  static GridFunction zero(const UniformGrid& g) {
    return GridFunction(g, std::vector<cplx>(g.count(), cplx(0.0)));
  }

  template <typename F>
  static GridFunction tabulate(const UniformGrid& g, F&& f) {
    std::vector<cplx> v(g.count());
    for (std::size_t i = 0; i < g.count(); ++i) v[i] = f(g.x(i));
    return GridFunction(g, std::move(v));
  }

  std::size_t size() const noexcept { return values.size(); }
  cplx operator[](std::size_t i) const noexcept { return values[i]; }
  cplx& operator[](std::size_t i) noexcept { return values[i]; }

  double max_abs() const noexcept;
};

/// Largest pointwise modulus of the difference of two samplings.
double max_abs_diff(const GridFunction& a, const GridFunction& b);

}  // namespace nft
