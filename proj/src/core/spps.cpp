#include "core/spps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "core/quadrature.hpp"

namespace nft {
namespace {

void check_floor(const GridFunction& fn, double floor, const char* name) {
  for (std::size_t i = 0; i < fn.size(); ++i) {
    if (std::abs(fn[i]) < floor) {
      fail(errc::singular_base, std::string("base solution ") + name +
                                    " falls below the floor at x = " +
                                    std::to_string(fn.grid.x(i)));
    }
  }
}

double vec_max_abs(const std::vector<cplx>& v) {
  double m = 0;
  for (const cplx& c : v) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

std::size_t SppsTable::column_slot(std::size_t grid_index) const {
  auto it = std::lower_bound(columns_.begin(), columns_.end(), grid_index);
  require(it != columns_.end() && *it == grid_index, errc::domain,
          "requested grid column is not stored in the coefficient table");
  return static_cast<std::size_t>(it - columns_.begin());
}

cplx SppsTable::at(const std::vector<cplx>& store, int n, std::size_t slot) const {
  require(n >= 0 && n <= order_, errc::domain, "coefficient order out of range");
  require(slot < columns_.size(), errc::domain, "column slot out of range");
  return store[static_cast<std::size_t>(n) * columns_.size() + slot];
}

double SppsTable::row_max_abs(int n) const {
  const std::size_t w = columns_.size();
  const std::size_t off = static_cast<std::size_t>(n) * w;
  double m = 0;
  for (std::size_t s = 0; s < w; ++s) {
    m = std::max(m, std::abs(a1_[off + s]));
    m = std::max(m, std::abs(a2_[off + s]));
    m = std::max(m, std::abs(b1_[off + s]));
    m = std::max(m, std::abs(b2_[off + s]));
  }
  return m;
}

SppsTable build_table(const GridFunction& q, const BaseJost& base,
                      const ZerothCoefficients& zeroth, const SppsBuildOptions& opt) {
  require(opt.order >= 0, errc::configuration, "series order must be nonnegative");
  require(base.f.grid == q.grid, errc::invalid_grid, "build_table: grid mismatch");
  check_floor(base.f, opt.base_floor, "f");
  check_floor(base.g, opt.base_floor, "g");

  const std::size_t n = q.size();
  const int N = opt.order;

  SppsTable table;
  table.grid_ = q.grid;
  table.order_ = N;
  if (opt.store_all_columns) {
    table.columns_.resize(n);
    for (std::size_t i = 0; i < n; ++i) table.columns_[i] = i;
  } else {
    std::set<std::size_t> cols{0, n - 1, q.grid.nearest_index(0.0)};
    for (double px : opt.probe_x) cols.insert(q.grid.nearest_index(px));
    table.columns_.assign(cols.begin(), cols.end());
  }
  const std::size_t w = table.columns_.size();
  const std::size_t rows = static_cast<std::size_t>(N) + 1;
  table.a1_.resize(rows * w);
  table.a2_.resize(rows * w);
  table.b1_.resize(rows * w);
  table.b2_.resize(rows * w);
  table.a1p_.resize(rows * w);
  table.b2p_.resize(rows * w);

  GridFunction qbar = q;
  for (std::size_t i = 0; i < n; ++i) qbar[i] = std::conj(q[i]);

  // Current full-grid rows
  std::vector<cplx> a1 = zeroth.a10.values, a2 = zeroth.a20.values;
  std::vector<cplx> b1 = zeroth.b10.values, b2 = zeroth.b20.values;
  std::vector<cplx> a1p = zeroth.a10_prime.values, b2p = zeroth.b20_prime.values;

  auto store_row = [&](int row) {
    const std::size_t off = static_cast<std::size_t>(row) * w;
    for (std::size_t s = 0; s < w; ++s) {
      const std::size_t i = table.columns_[s];
      table.a1_[off + s] = a1[i];
      table.a2_[off + s] = a2[i];
      table.b1_[off + s] = b1[i];
      table.b2_[off + s] = b2[i];
      table.a1p_[off + s] = a1p[i];
      table.b2p_[off + s] = b2p[i];
    }
  };
  store_row(0);

  GridFunction work = GridFunction::zero(q.grid);
  for (int row = 1; row <= N; ++row) {
    // a side. Hhat(x) = int_x^X e^{x-s} f (a1' + a1 - q a2) ds
    for (std::size_t i = 0; i < n; ++i)
      work[i] = base.f[i] * (a1p[i] + a1[i] - q[i] * a2[i]);
    GridFunction hhat = exp_cumulative_from_right(work);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx fi = base.f[i];
      work[i] = qbar[i] * hhat[i] / (fi * fi);
    }
    GridFunction outer = cumulative_from_right(work);
    std::vector<cplx> a1_next(n), a2_next(n), a1p_next(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx a2n = -base.f[i] * outer[i];
      a2_next[i] = a2n;
      a1_next[i] = (base.psi1_scaled[i] * a2n - hhat[i]) / base.f[i];
      a1p_next[i] = a1p[i] + a1_next[i] + a1[i] + q[i] * (a2n - a2[i]);
    }

    // b side. Phat(x) = int_X^x e^{s-x} g (b2' - b2 + conj(q) b1) ds
    for (std::size_t i = 0; i < n; ++i)
      work[i] = base.g[i] * (b2p[i] - b2[i] + qbar[i] * b1[i]);
    GridFunction phat = exp_cumulative_from_left(work);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx gi = base.g[i];
      work[i] = q[i] * phat[i] / (gi * gi);
    }
    GridFunction inner = cumulative_from_left(work);
    std::vector<cplx> b1_next(n), b2_next(n), b2p_next(n);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx b1n = base.g[i] * inner[i];
      b1_next[i] = b1n;
      b2_next[i] = (base.phi2_scaled[i] * b1n + phat[i]) / base.g[i];
      b2p_next[i] = b2p[i] - b2_next[i] - b2[i] - qbar[i] * (b1n - b1[i]);
    }

    a1 = std::move(a1_next);
    a2 = std::move(a2_next);
    a1p = std::move(a1p_next);
    b1 = std::move(b1_next);
    b2 = std::move(b2_next);
    b2p = std::move(b2p_next);

    const double rowmax = std::max(std::max(vec_max_abs(a1), vec_max_abs(a2)),
                                   std::max(vec_max_abs(b1), vec_max_abs(b2)));
    if (!(rowmax < opt.overflow_limit)) {
      fail(errc::instability, "coefficient recurrence overflowed at order " +
                                  std::to_string(row) + "; last stable order " +
                                  std::to_string(row - 1));
    }
    store_row(row);
  }
  return table;
}

TildedRow tilded_row(const SppsTable& table, int n) {
  require(n >= 0 && n <= table.order(), errc::domain, "tilded_row: order out of range");
  const std::size_t w = table.columns().size();
  TildedRow out;
  out.a1t.resize(w);
  out.a2t.resize(w);
  out.b1t.resize(w);
  out.b2t.resize(w);
  for (std::size_t s = 0; s < w; ++s) {
    out.a1t[s] = std::conj(table.a2(n, s));
    out.a2t[s] = -std::conj(table.a1(n, s));
    out.b1t[s] = std::conj(table.b2(n, s));
    out.b2t[s] = -std::conj(table.b1(n, s));
  }
  return out;
}

Vec2 evaluate_jost(const SppsTable& table, const SpectralPoint& point, JostKind which,
                   std::size_t grid_index) {
  const std::size_t slot = table.column_slot(grid_index);
  const double x = table.grid().x(grid_index);
  const int N = table.order();

  const bool tilded = (which == JostKind::phi_tilde || which == JostKind::psi_tilde);
  const cplx zz = tilded ? point.z_tilde : point.z;
  const cplx zz1 = tilded ? point.z_tilde_plus_one : point.z_plus_one;
  require(std::abs(zz) <= 1.0 + 1e-9, errc::domain,
          "spectral point outside the closed unit disk for the requested solution");

  // Horner sum of (-zz)^n over rows; component selectors depend on the kind.
  cplx s1 = 0.0, s2 = 0.0;
  for (int row = N; row >= 0; --row) {
    cplx c1, c2;
    switch (which) {
      case JostKind::phi:
        c1 = table.b1(row, slot);
        c2 = table.b2(row, slot);
        break;
      case JostKind::psi:
        c1 = table.a1(row, slot);
        c2 = table.a2(row, slot);
        break;
      case JostKind::phi_tilde:  // b~ = (conj b2, -conj b1)
        c1 = std::conj(table.b2(row, slot));
        c2 = -std::conj(table.b1(row, slot));
        break;
      case JostKind::psi_tilde:  // a~ = (conj a2, -conj a1)
        c1 = std::conj(table.a2(row, slot));
        c2 = -std::conj(table.a1(row, slot));
        break;
    }
    s1 = s1 * (-zz) + c1;
    s2 = s2 * (-zz) + c2;
  }
  s1 *= zz1;
  s2 *= zz1;

  const cplx irx = cplx(0.0, 1.0) * point.rho * x;
  switch (which) {
    case JostKind::phi:
      return Vec2{std::exp(-irx) * (1.0 + s1), std::exp(-irx) * s2};
    case JostKind::psi:
      return Vec2{std::exp(irx) * s1, std::exp(irx) * (1.0 + s2)};
    case JostKind::phi_tilde:
      return Vec2{std::exp(irx) * s1, std::exp(irx) * (-1.0 + s2)};
    case JostKind::psi_tilde:
      return Vec2{std::exp(-irx) * (1.0 + s1), std::exp(-irx) * s2};
  }
  fail(errc::domain, "corrupt Jost kind");
}

void dump_table_csv(const SppsTable& table, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  require(f != nullptr, errc::io, "cannot open for writing: " + path);
  std::fprintf(f, "x,n,re_a1,im_a1,re_a2,im_a2,re_b1,im_b1,re_b2,im_b2\n");
  for (std::size_t s = 0; s < table.columns().size(); ++s) {
    const double x = table.grid().x(table.columns()[s]);
    for (int n = 0; n <= table.order(); ++n) {
      const cplx a1 = table.a1(n, s), a2 = table.a2(n, s);
      const cplx b1 = table.b1(n, s), b2 = table.b2(n, s);
      std::fprintf(f, "%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", x, n,
                   a1.real(), a1.imag(), a2.real(), a2.imag(), b1.real(), b1.imag(),
                   b2.real(), b2.imag());
    }
  }
  std::fclose(f);
}

}  // namespace nft
