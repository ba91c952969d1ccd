#include "core/inverse.hpp"

#include <algorithm>
#include <cmath>

#include "core/spectral_map.hpp"
#include "core/spline.hpp"
#include "core/threading.hpp"

namespace nft {
namespace {

constexpr cplx kI{0.0, 1.0};

struct SampleSet {
  std::vector<double> rho;
  std::vector<cplx> a, b;       // data at the set's time
  std::vector<cplx> z, u, w;    // z on the unit circle, u = z+1, w = -z
  std::vector<double> cu;       // |u|^2
  std::vector<cplx> ev, cs;     // eigenvalues and norming constants
  std::vector<cplx> zm, um, wm; // disk images of the eigenvalues
  double bmax = 0;
};

SampleSet make_samples(const ScatteringData& sd, const InverseConfig& cfg) {
  sd.check();
  SampleSet s;
  const std::size_t total = sd.rho.size();
  std::size_t K = total;
  if (cfg.sample_limit > 0) K = std::min(cfg.sample_limit, total);
  require(K >= 1, errc::configuration, "inverse solve needs rho samples");
  s.rho.reserve(K);
  for (std::size_t i = 0; i < K; ++i) {
    const std::size_t idx =
        (K == total) ? i
                     : (K == 1 ? 0 : (i * (total - 1) + (K - 1) / 2) / (K - 1));
    s.rho.push_back(sd.rho[idx]);
    s.a.push_back(sd.a[idx]);
    s.b.push_back(sd.b[idx]);
  }
  for (std::size_t k = 0; k < K; ++k) {
    const SpectralPoint pt = rho_to_z(cplx(s.rho[k], 0.0));
    s.z.push_back(pt.z);
    s.u.push_back(pt.z_plus_one);
    s.w.push_back(-pt.z);
    s.cu.push_back(std::norm(pt.z_plus_one));
    s.bmax = std::max(s.bmax, std::abs(s.b[k]));
  }
  s.ev = sd.eigenvalues;
  s.cs = sd.norming_constants;
  for (const cplx& rho : s.ev) {
    const SpectralPoint pt = rho_to_z(rho);
    s.zm.push_back(pt.z);
    s.um.push_back(pt.z_plus_one);
    s.wm.push_back(-pt.z);
  }
  require(cfg.order >= 1, errc::configuration, "inverse order must be at least 1");
  require(2 * static_cast<std::size_t>(cfg.order) <= K + s.ev.size(), errc::configuration,
          "inverse order too large: 2N must not exceed K + M");
  return s;
}

// Bound-state rows, equilibrated to order-one infinity norm. The raw rows
// carry e^{+-i rho_m x} factors whose magnitudes reach e^{~100} on wide
// domains, and the norming constant |c_m(t)| = |c_m(0)| e^{-8 alpha beta t}
// can be tiny, so the row scale must track max(Im rho x, -Im rho x + ln|c|).
// Both solve paths apply the same scaling.
struct DiscreteRow {
  Eigen::RowVectorXcd row;
  cplx rhs;
};

double discrete_row_shift(cplx rho, cplx c, double x) {
  return std::max(rho.imag() * x, -rho.imag() * x + std::log(std::abs(c)));
}

void discrete_rows(const SampleSet& s, int N, double x, double weight,
                   std::vector<DiscreteRow>& out) {
  out.clear();
  for (std::size_t m = 0; m < s.ev.size(); ++m) {
    const cplx rho = s.ev[m];
    const cplx c = s.cs[m];
    const double shift = discrete_row_shift(rho, c, x) - std::log(weight);
    const cplx e_minus = std::exp(-kI * rho * x - shift);  // e^{-i rho x} scaled
    // c e^{i rho x - shift}, assembled in log magnitude so the intermediate
    // exponential cannot overflow when |c| is small
    const cplx c_e_plus =
        (c / std::abs(c)) * std::exp(kI * rho * x + std::log(std::abs(c)) - shift);
    DiscreteRow r13;
    r13.row = Eigen::RowVectorXcd::Zero(4 * N);
    cplx pw = 1.0;
    for (int p = 0; p < N; ++p, pw *= s.wm[m]) {
      r13.row(p) = e_minus * s.um[m] * pw;
      r13.row(N + p) = -c_e_plus * s.um[m] * pw;
    }
    r13.rhs = -e_minus;
    out.push_back(std::move(r13));

    const cplx rho_c = std::conj(rho);
    const cplx e_plus_c = std::exp(kI * rho_c * x - shift);  // e^{i conj(rho) x} scaled
    const cplx cc = std::conj(c);
    const cplx cc_e_minus =
        (cc / std::abs(cc)) * std::exp(-kI * rho_c * x + std::log(std::abs(cc)) - shift);
    DiscreteRow r14;
    r14.row = Eigen::RowVectorXcd::Zero(4 * N);
    cplx pwc = 1.0;
    const cplx umc = std::conj(s.um[m]);
    const cplx wmc = std::conj(s.wm[m]);
    for (int p = 0; p < N; ++p, pwc *= wmc) {
      r14.row(3 * N + p) = e_plus_c * umc * pwc;
      r14.row(2 * N + p) = -cc_e_minus * umc * pwc;
    }
    // conj(phi_2) = conj(c) conj(psi_2) puts +conj(c) e^{-i conj(rho) x} on
    // the right-hand side once the leading 1 of psi_2 moves over.
    r14.rhs = cc_e_minus;
    out.push_back(std::move(r14));
  }
}

}  // namespace

void assemble_system(const ScatteringData& sd, double x, const InverseConfig& cfg,
                     Eigen::MatrixXcd& matrix, Eigen::VectorXcd& rhs) {
  const SampleSet s = make_samples(sd, cfg);
  const int N = cfg.order;
  const std::size_t K = s.rho.size(), M = s.ev.size();
  matrix.setZero(2 * (K + M), 4 * N);
  rhs.setZero(2 * (K + M));

  for (std::size_t k = 0; k < K; ++k) {
    const cplx em = std::exp(-kI * s.rho[k] * x);  // e^{-i rho x}, unimodular
    const cplx ep = std::conj(em);
    const cplx u = s.u[k], w = s.w[k];
    const cplx uc = std::conj(u), wc = std::conj(w);
    cplx pw = 1.0, pwc = 1.0;
    for (int p = 0; p < N; ++p, pw *= w, pwc *= wc) {
      matrix(2 * k, p) = em * u * pw;
      matrix(2 * k, N + p) = -s.b[k] * ep * u * pw;
      matrix(2 * k, 2 * N + p) = -s.a[k] * em * uc * pwc;
      matrix(2 * k + 1, N + p) = std::conj(s.a[k]) * ep * u * pw;
      matrix(2 * k + 1, 2 * N + p) = -std::conj(s.b[k]) * em * uc * pwc;
      matrix(2 * k + 1, 3 * N + p) = ep * uc * pwc;
    }
    rhs(2 * k) = (s.a[k] - 1.0) * em;
    rhs(2 * k + 1) = std::conj(s.b[k]) * em;
  }

  // literal bound-state rows (no scaling here; solve paths rescale)
  for (std::size_t m = 0; m < M; ++m) {
    const cplx rho = s.ev[m];
    const cplx em = std::exp(-kI * rho * x), ep = std::exp(kI * rho * x);
    const cplx emc = std::exp(-kI * std::conj(rho) * x), epc = std::exp(kI * std::conj(rho) * x);
    const cplx umc = std::conj(s.um[m]), wmc = std::conj(s.wm[m]);
    cplx pw = 1.0, pwc = 1.0;
    for (int p = 0; p < N; ++p, pw *= s.wm[m], pwc *= wmc) {
      matrix(2 * K + 2 * m, p) = em * s.um[m] * pw;
      matrix(2 * K + 2 * m, N + p) = -s.cs[m] * ep * s.um[m] * pw;
      matrix(2 * K + 2 * m + 1, 3 * N + p) = epc * umc * pwc;
      matrix(2 * K + 2 * m + 1, 2 * N + p) = -std::conj(s.cs[m]) * emc * umc * pwc;
    }
    rhs(2 * K + 2 * m) = -em;
    rhs(2 * K + 2 * m + 1) = std::conj(s.cs[m]) * emc;
  }
}

SolveAtResult solve_at(const ScatteringData& sd, double x, const InverseConfig& cfg) {
  Eigen::MatrixXcd A;
  Eigen::VectorXcd rhs;
  assemble_system(sd, x, cfg, A, rhs);

  // Rescale the bound-state rows exactly as the fast path does.
  const std::size_t M = sd.eigenvalues.size();
  const std::size_t base = A.rows() - 2 * M;
  for (std::size_t m = 0; m < M; ++m) {
    const double scale =
        cfg.discrete_weight *
        std::exp(-discrete_row_shift(sd.eigenvalues[m], sd.norming_constants[m], x));
    A.row(base + 2 * m) *= scale;
    rhs(base + 2 * m) *= scale;
    A.row(base + 2 * m + 1) *= scale;
    rhs(base + 2 * m + 1) *= scale;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(A);
  double cond = 0;
  {
    const auto& R = qr.matrixR();
    double dmax = 0, dmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < std::min(R.rows(), R.cols()); ++i) {
      const double d = std::abs(R(i, i));
      dmax = std::max(dmax, d);
      dmin = std::min(dmin, d);
    }
    cond = (dmin > 0) ? dmax / dmin : std::numeric_limits<double>::infinity();
  }

  double lam = cfg.regularization;
  if (cond > 1e12) lam = std::max(lam, 1e-12 * A.norm());
  Eigen::VectorXcd u;
  if (lam > 0) {
    Eigen::MatrixXcd Aug(A.rows() + A.cols(), A.cols());
    Aug.topRows(A.rows()) = A;
    Aug.bottomRows(A.cols()) =
        std::sqrt(lam) * Eigen::MatrixXcd::Identity(A.cols(), A.cols());
    Eigen::VectorXcd raug = Eigen::VectorXcd::Zero(Aug.rows());
    raug.head(A.rows()) = rhs;
    u = Eigen::ColPivHouseholderQR<Eigen::MatrixXcd>(Aug).solve(raug);
  } else {
    u = qr.solve(rhs);
  }

  SolveAtResult out;
  out.blocks = u;
  const double rn = rhs.norm();
  out.rel_residual = rn > 0 ? (A * u - rhs).norm() / rn : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// Fast per-x solver.
//
// With the unimodular row phases removed, the normal matrix of the per-x
// system decomposes into Toeplitz/Hankel blocks built from a handful of
// sample sums; only the sums weighted by b(rho) e^{2 i rho x} depend on x.
// The Gram solve is followed by corrected-residual refinement against the
// actual rows, which restores orthogonal-factorization accuracy.
// ---------------------------------------------------------------------------

struct InverseEngine::Impl {
  InverseConfig cfg;
  SampleSet s;
  int N = 0;
  // x-independent reductions; Toeplitz offsets are stored at index N-1+d
  std::vector<cplx> T0, TAB;  // sum |u|^2 w^d, sum (|a|^2+|b|^2) |u|^2 w^d
  std::vector<cplx> Ha;       // sum a conj(u)^2 conj(w)^s, s = 0..2N-2
  std::vector<cplx> R1, R3;   // rhs reductions
  double rhs_const_norm2 = 0;

  void precompute();
  void x_sums(double x, std::vector<cplx>& TbZ, std::vector<cplx>& S2,
              std::vector<cplx>& S4) const;
  void gram(double x, const std::vector<cplx>& TbZ, const std::vector<cplx>& S2,
            const std::vector<cplx>& S4, std::vector<DiscreteRow>& drows,
            Eigen::MatrixXcd& G, Eigen::VectorXcd& v) const;
  // residual of the scaled rows at solution u; fills Ahr with A^H r
  double residual(double x, const Eigen::VectorXcd& u,
                  const std::vector<DiscreteRow>& drows, Eigen::VectorXcd* Ahr,
                  double* rhs_norm2) const;
};

void InverseEngine::Impl::precompute() {
  N = cfg.order;
  const std::size_t K = s.rho.size();
  T0.assign(2 * N - 1, cplx(0.0));
  TAB.assign(2 * N - 1, cplx(0.0));
  Ha.assign(2 * N - 1, cplx(0.0));
  R1.assign(N, cplx(0.0));
  R3.assign(N, cplx(0.0));
  for (std::size_t k = 0; k < K; ++k) {
    const cplx w = s.w[k], u = s.u[k];
    const double cu = s.cu[k];
    const double ab = std::norm(s.a[k]) + std::norm(s.b[k]);
    cplx pw = 1.0;
    for (int d = 0; d < N; ++d, pw *= w) {
      T0[N - 1 + d] += cu * pw;
      TAB[N - 1 + d] += ab * cu * pw;
    }
    const cplx uc2 = std::conj(u) * std::conj(u);
    const cplx wc = std::conj(w);
    cplx pwc = 1.0;
    for (int sx = 0; sx < 2 * N - 1; ++sx, pwc *= wc) Ha[sx] += s.a[k] * uc2 * pwc;
    const cplx uc = std::conj(u);
    cplx pc = 1.0, pp = 1.0;
    for (int p = 0; p < N; ++p, pc *= wc, pp *= w) {
      R1[p] += (s.a[k] - 1.0) * uc * pc;
      R3[p] += (std::conj(s.a[k]) - ab) * u * pp;
    }
    rhs_const_norm2 += std::norm(s.a[k] - 1.0) + std::norm(s.b[k]);
  }
  // Toeplitz symmetry for the real-weight sums
  for (int d = 1; d < N; ++d) {
    T0[N - 1 - d] = std::conj(T0[N - 1 + d]);
    TAB[N - 1 - d] = std::conj(TAB[N - 1 + d]);
  }
}

void InverseEngine::Impl::x_sums(double x, std::vector<cplx>& TbZ, std::vector<cplx>& S2,
                                 std::vector<cplx>& S4) const {
  TbZ.assign(2 * N - 1, cplx(0.0));
  S2.assign(N, cplx(0.0));
  S4.assign(N, cplx(0.0));
  if (s.bmax < 1e-300) return;
  const std::size_t K = s.rho.size();
  for (std::size_t k = 0; k < K; ++k) {
    const cplx zeta = std::polar(1.0, 2.0 * s.rho[k] * x);
    const cplx bz = s.b[k] * zeta;
    const cplx w = s.w[k], wc = std::conj(w);
    const cplx tb = bz * s.cu[k];
    cplx pw = 1.0;
    for (int d = 0; d < N; ++d, pw *= w) TbZ[N - 1 + d] += tb * pw;
    cplx pwc = wc;
    for (int d = 1; d < N; ++d, pwc *= wc) TbZ[N - 1 - d] += tb * pwc;
    const cplx s2w = bz * s.u[k];
    const cplx s4w = bz * std::conj(s.u[k]);
    cplx pp = 1.0, pc = 1.0;
    for (int p = 0; p < N; ++p, pp *= w, pc *= wc) {
      S2[p] += s2w * pp;
      S4[p] += s4w * pc;
    }
  }
}

void InverseEngine::Impl::gram(double x, const std::vector<cplx>& TbZ,
                               const std::vector<cplx>& S2, const std::vector<cplx>& S4,
                               std::vector<DiscreteRow>& drows, Eigen::MatrixXcd& G,
                               Eigen::VectorXcd& v) const {
  G.setZero(4 * N, 4 * N);
  v.setZero(4 * N);
  for (int p = 0; p < N; ++p) {
    for (int q = 0; q < N; ++q) {
      const int d = N - 1 + (q - p);
      const int sxy = p + q;
      G(p, q) = T0[d];
      G(p, N + q) = -TbZ[d];
      G(p, 2 * N + q) = -Ha[sxy];
      G(N + p, N + q) = TAB[d];
      G(N + p, 3 * N + q) = Ha[sxy];
      G(2 * N + p, 2 * N + q) = TAB[N - 1 + (p - q)];
      G(2 * N + p, 3 * N + q) = -TbZ[N - 1 + (p - q)];
      G(3 * N + p, 3 * N + q) = T0[N - 1 + (p - q)];
    }
    v(p) = R1[p];
    v(N + p) = std::conj(S2[p]);
    v(2 * N + p) = R3[p];
    v(3 * N + p) = std::conj(S4[p]);
  }
  // Hermitian completion of the block-upper part
  for (int i = 0; i < 4 * N; ++i)
    for (int j = 0; j < i; ++j) G(i, j) = std::conj(G(j, i));

  discrete_rows(s, N, x, cfg.discrete_weight, drows);
  for (const DiscreteRow& r : drows) {
    G.selfadjointView<Eigen::Lower>().rankUpdate(r.row.adjoint(), 1.0);
    v += r.row.adjoint() * r.rhs;
  }
  for (int i = 0; i < 4 * N; ++i)
    for (int j = i + 1; j < 4 * N; ++j) G(i, j) = std::conj(G(j, i));
}

double InverseEngine::Impl::residual(double x, const Eigen::VectorXcd& u,
                                     const std::vector<DiscreteRow>& drows,
                                     Eigen::VectorXcd* Ahr, double* rhs_norm2) const {
  if (Ahr) Ahr->setZero(4 * N);
  double rn2 = 0;
  const std::size_t K = s.rho.size();
  for (std::size_t k = 0; k < K; ++k) {
    const cplx w = s.w[k], wc = std::conj(w);
    const cplx uu = s.u[k], uc = std::conj(uu);
    // block series at w and conj(w)
    cplx B1v = 0, A1v = 0, A2v = 0, B2v = 0;
    cplx pw = 1.0, pc = 1.0;
    for (int p = 0; p < N; ++p, pw *= w, pc *= wc) {
      B1v += u(p) * pw;
      A1v += u(N + p) * pw;
      A2v += u(2 * N + p) * pc;
      B2v += u(3 * N + p) * pc;
    }
    const cplx zeta = std::polar(1.0, 2.0 * s.rho[k] * x);
    const cplx r11 =
        uu * B1v - s.b[k] * zeta * uu * A1v - s.a[k] * uc * A2v - (s.a[k] - 1.0);
    const cplx r12 = std::conj(s.a[k]) * uu * A1v -
                     std::conj(s.b[k] * zeta) * uc * A2v + uc * B2v -
                     std::conj(s.b[k] * zeta);
    rn2 += std::norm(r11) + std::norm(r12);
    if (Ahr) {
      const cplx t11 = r11, t12 = r12;
      cplx qw = 1.0, qc = 1.0;
      for (int p = 0; p < N; ++p, qw *= w, qc *= wc) {
        (*Ahr)(p) += std::conj(uu * qw) * t11;
        (*Ahr)(N + p) += std::conj(-s.b[k] * zeta * uu * qw) * t11 +
                         std::conj(std::conj(s.a[k]) * uu * qw) * t12;
        (*Ahr)(2 * N + p) += std::conj(-s.a[k] * uc * qc) * t11 +
                             std::conj(-std::conj(s.b[k] * zeta) * uc * qc) * t12;
        (*Ahr)(3 * N + p) += std::conj(uc * qc) * t12;
      }
    }
  }
  double rhsn2 = rhs_const_norm2;
  for (const DiscreteRow& r : drows) {
    const cplx res = (r.row * u).value() - r.rhs;
    rn2 += std::norm(res);
    rhsn2 += std::norm(r.rhs);
    if (Ahr) *Ahr += r.row.adjoint() * res;
  }
  if (rhs_norm2) *rhs_norm2 = rhsn2;
  return rn2;
}

InverseEngine::InverseEngine(const ScatteringData& sd, const InverseConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  impl_->cfg = cfg;
  impl_->s = make_samples(sd, cfg);
  impl_->precompute();
}

InverseEngine::~InverseEngine() = default;

SolveAtResult InverseEngine::solve(double x) const {
  const Impl& im = *impl_;
  const int N = im.N;
  std::vector<cplx> TbZ, S2, S4;
  im.x_sums(x, TbZ, S2, S4);
  std::vector<DiscreteRow> drows;
  Eigen::MatrixXcd G;
  Eigen::VectorXcd v;
  im.gram(x, TbZ, S2, S4, drows, G, v);

  double lam = im.cfg.regularization;
  Eigen::LLT<Eigen::MatrixXcd> llt;
  for (int attempt = 0;; ++attempt) {
    Eigen::MatrixXcd Gr = G;
    if (lam > 0) Gr.diagonal().array() += lam;
    llt.compute(Gr);
    if (llt.info() == Eigen::Success) break;
    require(attempt < 4, errc::ill_conditioned,
            "normal matrix not positive definite even with ridge");
    const double mean_diag = G.diagonal().real().mean();
    lam = (lam > 0) ? lam * 100.0 : 1e-13 * std::max(mean_diag, 1e-300);
  }

  Eigen::VectorXcd u = llt.solve(v);
  for (int step = 0; step < im.cfg.refine_steps; ++step) {
    Eigen::VectorXcd Ahr(4 * N);
    im.residual(x, u, drows, &Ahr, nullptr);
    u -= llt.solve(Ahr);
  }

  SolveAtResult out;
  out.blocks = std::move(u);
  if (im.cfg.residual_report) {
    double rhsn2 = 0;
    const double rn2 = im.residual(x, out.blocks, drows, nullptr, &rhsn2);
    out.rel_residual = rhsn2 > 0 ? std::sqrt(rn2 / rhsn2) : 0.0;
  }
  return out;
}

GridFunction recover_potential(const GridFunction& b10, const GridFunction& b20,
                               double floor) {
  require(b10.grid == b20.grid, errc::invalid_grid, "recover_potential: grid mismatch");
  const GridFunction g1p = spline_derivative(b10);
  const GridFunction g2p = spline_derivative(b20);
  GridFunction q = GridFunction::zero(b10.grid);
  std::vector<double> singular;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const cplx G1 = 1.0 + b10[i];
    const cplx G2 = b20[i];
    const cplx numA = g1p[i];
    const cplx numB = -(g2p[i] + G2);
    if (std::max(std::abs(G2), std::abs(G1)) < floor) {
      if (std::abs(numA) < floor && std::abs(numB) < floor) {
        q[i] = 0.0;
      } else {
        singular.push_back(q.grid.x(i));
      }
    } else if (std::abs(G2) >= std::abs(G1)) {
      q[i] = numA / G2;
    } else {
      q[i] = std::conj(numB / G1);
    }
  }
  if (!singular.empty()) {
    std::string msg = "potential recovery is singular at " +
                      std::to_string(singular.size()) + " points, first at x = " +
                      std::to_string(singular.front());
    fail(errc::recovery_singularity, msg);
  }
  return q;
}

double wronskian_indicator(const GridFunction& b10, const GridFunction& b20,
                           const GridFunction& a10, const GridFunction& a20) {
  double wmin = std::numeric_limits<double>::infinity(), wmax = 0;
  for (std::size_t i = 0; i < b10.size(); ++i) {
    const cplx W = (1.0 + b10[i]) * (1.0 + a20[i]) - b20[i] * a10[i];
    const double m = std::abs(W);
    wmin = std::min(wmin, m);
    wmax = std::max(wmax, m);
  }
  return wmax - wmin;
}

InverseSolveResult run_inverse(const ScatteringData& sd, const InverseConfig& cfg) {
  double lo = cfg.x_min, hi = cfg.x_max;
  if (!(lo < hi)) {
    lo = sd.meta.x_min;
    hi = sd.meta.x_max;
  }
  require(lo < hi, errc::configuration, "inverse solve needs a recovery interval");
  require(cfg.x_step > 0, errc::configuration, "x_step must be positive");
  const UniformGrid grid = UniformGrid::with_density(lo, hi, 1.0 / cfg.x_step);

  InverseEngine engine(sd, cfg);
  const int N = cfg.order;
  GridFunction b10 = GridFunction::zero(grid), b20 = b10, a10 = b10, a20 = b10;
  std::vector<double> residuals(grid.count(), 0.0);

  parallel_for(grid.count(), [&](std::size_t i) {
    const SolveAtResult r = engine.solve(grid.x(i));
    b10[i] = r.blocks(0);
    a10[i] = r.blocks(N);
    a20[i] = std::conj(r.blocks(2 * N));
    b20[i] = std::conj(r.blocks(3 * N));
    residuals[i] = r.rel_residual;
  });

  GridFunction q = recover_potential(b10, b20, cfg.recovery_floor);
  const double eps = wronskian_indicator(b10, b20, a10, a20);
  return InverseSolveResult{std::move(q),   std::move(b10),       std::move(b20),
                            std::move(a10), std::move(a20),       std::move(residuals),
                            eps};
}

}  // namespace nft
