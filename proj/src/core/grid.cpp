#include "core/grid.hpp"

#include <algorithm>
#include <cmath>

namespace nft {

UniformGrid::UniformGrid(double x_min, double x_max, std::size_t count)
    : x_min_(x_min), x_max_(x_max), count_(count) {
  require(x_min < x_max, errc::invalid_grid, "grid requires x_min < x_max");
  require(count >= 6, errc::invalid_grid, "grid too short: need at least 6 points");
  require((count - 1) % 5 == 0, errc::invalid_grid,
          "grid point count must be 1 mod 5 for 6-point panels");
  h_ = (x_max - x_min) / static_cast<double>(count - 1);
  nodes_per_unit_ = static_cast<double>(count - 1) / (x_max - x_min);
}

UniformGrid UniformGrid::with_density(double x_min, double x_max, double nodes_per_unit) {
  require(nodes_per_unit > 0, errc::invalid_grid, "nodes_per_unit must be positive");
  require(x_min < x_max, errc::invalid_grid, "grid requires x_min < x_max");
  double raw = (x_max - x_min) * nodes_per_unit;
  auto intervals = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  intervals = std::max<std::size_t>(intervals, 5);
  if (intervals % 5 != 0) intervals += 5 - intervals % 5;
  return UniformGrid(x_min, x_max, intervals + 1);
}

UniformGrid UniformGrid::with_count(double x_min, double x_max, std::size_t count) {
  return UniformGrid(x_min, x_max, count);
}

std::vector<double> UniformGrid::points() const {
  std::vector<double> p(count_);
  for (std::size_t i = 0; i < count_; ++i) p[i] = x(i);
  return p;
}

std::size_t UniformGrid::nearest_index(double x0) const noexcept {
  double t = (x0 - x_min_) / h_;
  if (t <= 0) return 0;
  auto i = static_cast<std::size_t>(std::lround(t));
  return std::min(i, count_ - 1);
}

double GridFunction::max_abs() const noexcept {
  double m = 0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
  require(a.grid == b.grid, errc::invalid_grid, "grid mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace nft
