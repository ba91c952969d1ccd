// Acceptance suite. Tiers:
//   fast  - structural properties and the integration oracle cross-check
//   paper - benchmark examples 1-3 at reference settings
//   slow  - benchmark example 4 on the wide domain
// Prints one pass/fail line per criterion; exit code is the failure count.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "core/direct.hpp"
#include "core/evolution.hpp"
#include "core/inverse.hpp"
#include "core/oracles.hpp"
#include "core/quadrature.hpp"
#include "core/validate.hpp"
#include "support/ode_oracle.hpp"

using namespace nft;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void report_bound(const std::string& name, double measured, double bound) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "measured %.3e, bound %.3e", measured, bound);
  report(name, std::isfinite(measured) && measured <= bound, buf);
}

void report_interval(const std::string& name, double measured, double lo, double hi) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "measured %.4f, allowed [%.4f, %.4f]", measured, lo, hi);
  report(name, std::isfinite(measured) && measured >= lo && measured <= hi, buf);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DirectOptions paper_direct(int order, double half_width) {
  DirectOptions opt;
  opt.order = order;
  opt.nodes_per_unit = 1500.0;
  opt.rho.count = 5000;
  opt.domain = std::make_pair(-half_width, half_width);
  return opt;
}

double recovery_error_against(const InverseSolveResult& inv,
                              const std::function<cplx(double)>& ref) {
  double worst = 0;
  for (std::size_t i = 0; i < inv.q_recovered.size(); ++i)
    worst = std::max(worst, std::abs(inv.q_recovered[i] - ref(inv.q_recovered.grid.x(i))));
  return worst;
}

// ---------------------------------------------------------------- paper tier

void run_paper_tier() {
  // Example 1: chirped sech, closed-form scattering data. The slow sech tails
  // still sit at 1.2e-5 at |x| = 12, which caps any truncated computation near
  // 1e-5 against the closed form; the domain ladder picks [-25, 25] here.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = PotentialSpec::chirped_sech(1.0, 0.1);
    const ScatteringData sd = run_direct(spec, paper_direct(160, 25.0));
    const double direct_seconds = seconds_since(t0);

    const ChirpedSechParams p{1.0, 0.1};
    double aerr = 0, berr = 0;
    for (std::size_t k = 0; k < sd.rho.size(); ++k) {
      const cplx rho(sd.rho[k], 0.0);
      aerr = std::max(aerr, std::abs(sd.a[k] - analytic_a_chirped_sech(p, rho)));
      berr = std::max(berr, std::abs(sd.b[k] - analytic_b_chirped_sech(p, rho)));
    }
    report_bound("criterion 1: example 1 max |a - a_ref|", aerr, 1e-8);
    report_bound("criterion 1: example 1 max |b - b_ref|", berr, 1e-8);
    report_bound("criterion 1: example 1 direct runtime [s]", direct_seconds, 300.0);

    report("criterion 2: example 1 eigenvalue count", sd.eigenvalues.size() == 1,
           std::to_string(sd.eigenvalues.size()) + " found");
    if (sd.eigenvalues.size() == 1) {
      report_bound("criterion 2: example 1 |rho_1 - ref|",
                   std::abs(sd.eigenvalues[0] - cplx(0.0, 0.498749217771909)), 1e-10);
      report_bound(
          "criterion 2: example 1 |c_1 - ref|",
          std::abs(sd.norming_constants[0] - cplx(-0.0192926642392854, -0.999813879232805)),
          1e-8);
    }
    report_bound("criterion 5: example 1 unitarity defect", sd.unitarity_defect(), 1e-8);

    InverseConfig cfg;
    cfg.order = 80;  // a(i/2) ~ 1.3e-3 amplifies series-truncation noise in the
                     // recovery divisions; N=50 stalls near 1e-2 error
    const InverseSolveResult inv = run_inverse(sd, cfg);
    report_bound("criterion 7: example 1 recovery error at t=0",
                 recovery_error_against(inv, [&](double x) { return spec.value(x); }),
                 5e-3);
  }

  // Example 2: single soliton
  {
    const double beta = std::numbers::pi / 2.0;
    const auto spec = PotentialSpec::soliton(0.5, beta, 0.1, 0.1);
    const ScatteringData sd = run_direct(spec, paper_direct(60, 12.0));
    report("criterion 3: example 2 eigenvalue count", sd.eigenvalues.size() == 1,
           std::to_string(sd.eigenvalues.size()) + " found");
    if (sd.eigenvalues.size() == 1) {
      report_bound("criterion 3: example 2 |rho_1 - (0.5 + i pi/2)|",
                   std::abs(sd.eigenvalues[0] - cplx(0.5, beta)), 1e-10);
    }
    report_bound("criterion 5: example 2 unitarity defect", sd.unitarity_defect(), 1e-8);

    InverseConfig cfg;
    cfg.order = 50;
    for (double t : {0.0, 1.0, 2.0}) {
      const ScatteringData sdt = (t == 0.0) ? sd : evolve(sd, t);
      const InverseSolveResult inv = run_inverse(sdt, cfg);
      const double err = recovery_error_against(inv, [&](double x) {
        return soliton_solution(0.5, beta, 0.1, 0.1, x, t);
      });
      char name[96];
      std::snprintf(name, sizeof(name), "criterion 6: example 2 recovery error at t=%g", t);
      report_bound(name, err, 1e-4);
    }
  }

  // Example 3: chirped gaussian, recorded spectrum
  {
    const auto spec = PotentialSpec::chirped_gaussian(2.5, 2.0, 1.0);
    const ScatteringData sd = run_direct(spec, paper_direct(160, 12.0));
    report("criterion 4: example 3 eigenvalue count", sd.eigenvalues.size() == 2,
           std::to_string(sd.eigenvalues.size()) + " found");
    if (sd.eigenvalues.size() == 2) {
      report_bound("criterion 4: example 3 |rho_1 - ref|",
                   std::abs(sd.eigenvalues[0] - cplx(-0.500000000000079, 1.97126262533634)),
                   1e-6);
      report_bound(
          "criterion 4: example 3 |rho_2 - ref|",
          std::abs(sd.eigenvalues[1] - cplx(-0.499999999999999, 0.792849539875588)), 1e-6);
      report_bound("criterion 4: example 3 |c_1 + 1|",
                   std::abs(sd.norming_constants[0] + 1.0), 1e-8);
      report_bound("criterion 4: example 3 |c_2 - 1|",
                   std::abs(sd.norming_constants[1] - 1.0), 1e-8);
    }
    report_bound("criterion 5: example 3 unitarity defect", sd.unitarity_defect(), 1e-8);

    InverseConfig cfg;
    cfg.order = 80;  // the series for this stronger potential decays more slowly
    const InverseSolveResult inv = run_inverse(sd, cfg);
    report_bound("criterion 7: example 3 recovery error at t=0",
                 recovery_error_against(inv, [&](double x) { return spec.value(x); }),
                 1e-2);
  }
}

// ----------------------------------------------------------------- slow tier

void run_slow_tier() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto spec = PotentialSpec::rational_tail(std::numbers::pi / 2.0, 1.0);
  const ScatteringData sd = run_direct(spec, paper_direct(250, 200.0));
  report_bound("criterion 5: example 4 unitarity defect", sd.unitarity_defect(), 1e-4);

  // supporting evidence for the direct stage (reported, not criteria)
  if (sd.eigenvalues.size() == 1) {
    std::printf("[info] example 4 |rho_1 - ref| = %.3e, |c_1 + 1| = %.3e\n",
                std::abs(sd.eigenvalues[0] - cplx(-2.205978998465, 0.485112496978116)),
                std::abs(sd.norming_constants[0] + 1.0));
  } else {
    std::printf("[info] example 4 eigenvalue count = %zu (expected 1)\n",
                sd.eigenvalues.size());
  }
  {
    // recovered initial profile over the window where the solution lives;
    // longer unknown series than the default, which this potential needs
    InverseConfig wcfg;
    wcfg.order = 100;
    wcfg.x_min = -20.0;
    wcfg.x_max = 20.0;
    wcfg.x_step = 0.1;
    const InverseSolveResult winv = run_inverse(sd, wcfg);
    std::printf("[info] example 4 recovery error over [-20,20], order 100: %.3e "
                "(reference run reports 1.9e-2)\n",
                recovery_error_against(winv, [&](double x) { return spec.value(x); }));
  }
  std::fflush(stdout);

  // The t=2.5 spread is known to sit just above its reference window: at the
  // default series order the translated soliton (near x = 22) leaves a
  // truncation bump of ~0.12 in |W|, and longer series overfit the weakly
  // determined far-field directions instead of removing it. Reported as
  // measured.
  InverseConfig cfg;
  cfg.order = 50;
  cfg.x_step = 0.1;  // recovery on the wide domain
  const double refs[3] = {0.11, 0.08, 0.03};
  const double times[3] = {0.0, 1.2, 2.5};
  for (int i = 0; i < 3; ++i) {
    const ScatteringData sdt = (times[i] == 0.0) ? sd : evolve(sd, times[i]);
    const InverseSolveResult inv = run_inverse(sdt, cfg);
    char name[96];
    std::snprintf(name, sizeof(name), "criterion 8: example 4 wronskian spread at t=%g",
                  times[i]);
    report_interval(name, inv.wronskian_epsilon, refs[i] / 3.0, refs[i] * 3.0);
  }
  report_bound("criterion 8: example 4 runtime [s]", seconds_since(t0), 1800.0);
}

// ----------------------------------------------------------------- fast tier

void run_fast_tier() {
  // criterion 9: zero potential end to end
  {
    DirectOptions opt;
    opt.order = 20;
    opt.nodes_per_unit = 300;
    opt.rho.count = 200;
    const ScatteringData sd = run_direct(PotentialSpec::zero(), opt);
    double aerr = 0, berr = 0;
    for (std::size_t k = 0; k < sd.rho.size(); ++k) {
      aerr = std::max(aerr, std::abs(sd.a[k] - 1.0));
      berr = std::max(berr, std::abs(sd.b[k]));
    }
    InverseConfig cfg;
    cfg.order = 20;
    cfg.x_step = 0.1;
    const InverseSolveResult inv = run_inverse(sd, cfg);
    const bool pass = aerr < 1e-13 && berr < 1e-13 && sd.eigenvalues.empty() &&
                      inv.q_recovered.max_abs() < 1e-12;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "max|a-1| %.1e, max|b| %.1e, eigenvalues %zu, max|q_rec| %.1e", aerr,
                  berr, sd.eigenvalues.size(), inv.q_recovered.max_abs());
    report("criterion 9: zero potential end to end", pass, buf);
  }

  // criterion 9: quadrature exactness on quintics
  {
    const UniformGrid g = UniformGrid::with_count(0.0, 1.0, 26);
    double worst = 0;
    for (int d = 0; d <= 5; ++d) {
      const GridFunction m =
          GridFunction::tabulate(g, [d](double x) { return cplx(std::pow(x, d)); });
      worst = std::max(worst, std::abs(integrate(m) - 1.0 / (d + 1)) * (d + 1));
    }
    report_bound("criterion 9: quadrature exact on quintics (relative)", worst, 1e-13);
  }

  // criterion 9: Moebius round trip
  {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> re(-50.0, 50.0), im(0.0, 50.0);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
      const cplx rho(re(rng), im(rng));
      if (std::abs(rho - cplx(0.0, -0.5)) < 1e-2) continue;
      worst = std::max(worst, std::abs(z_to_rho(rho_to_z(rho)) - rho) /
                                  (1.0 + std::abs(rho)));
    }
    report_bound("criterion 9: Moebius round trip (relative)", worst, 1e-14);
  }

  // criterion 9: evolution group property
  {
    ScatteringData sd;
    sd.rho = {-1.5, 0.2, 2.0};
    sd.a = {cplx(0.9, 0.1), cplx(0.8, -0.1), cplx(1.0, 0.0)};
    sd.b = {cplx(0.1, -0.2), cplx(0.3, 0.1), cplx(0.0, 0.1)};
    sd.eigenvalues = {cplx(0.4, 1.1)};
    sd.norming_constants = {cplx(-0.9, 0.5)};
    const ScatteringData split = evolve(evolve(sd, 0.35), 1.9);
    const ScatteringData joint = evolve(sd, 2.25);
    double worst = std::abs(split.meta.time - joint.meta.time);
    for (std::size_t k = 0; k < sd.rho.size(); ++k)
      worst = std::max(worst, std::abs(split.b[k] - joint.b[k]));
    worst = std::max(worst,
                     std::abs(split.norming_constants[0] - joint.norming_constants[0]));
    report_bound("criterion 9: evolution group property", worst, 1e-13);
  }

  // shared soliton sampling for the remaining structural checks
  const auto spec = PotentialSpec::soliton(0.5, std::numbers::pi / 2.0, 0.1, 0.1);
  const GridFunction q = evaluate(spec, UniformGrid::with_density(-12.0, 12.0, 1500.0));
  const BaseJost base = solve_base(q);
  const ZerothCoefficients zeroth = zeroth_coefficients(base, q);

  // criterion 9: conjugation-relation involution
  {
    SppsBuildOptions bo;
    bo.order = 6;
    const SppsTable t = build_table(q, base, zeroth, bo);
    double worst = 0;
    for (int n = 0; n <= t.order(); ++n) {
      const TildedRow tr = tilded_row(t, n);
      for (std::size_t s = 0; s < t.columns().size(); ++s) {
        worst = std::max(worst, std::abs(std::conj(tr.a2t[s]) + t.a1(n, s)));
        worst = std::max(worst, std::abs(-std::conj(tr.a1t[s]) + t.a2(n, s)));
        worst = std::max(worst, std::abs(std::conj(tr.b2t[s]) + t.b1(n, s)));
      }
    }
    report_bound("criterion 9: conjugation involution", worst, 1e-15);
  }

  // criterion 9: base-Jost Wronskian constancy
  {
    double wmin = std::numeric_limits<double>::infinity(), wmax = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const cplx w = base.g[i] * base.f[i] - base.phi2_scaled[i] * base.psi1_scaled[i];
      wmin = std::min(wmin, std::abs(w));
      wmax = std::max(wmax, std::abs(w));
    }
    report_bound("criterion 9: base-Jost Wronskian constancy", wmax - wmin, 1e-10);
  }

  // criterion 9: per-x solve order independence
  {
    DirectOptions dopt;
    dopt.order = 30;
    dopt.nodes_per_unit = 300;
    dopt.rho.count = 200;
    dopt.domain = std::make_pair(-12.0, 12.0);
    const ScatteringData sd = run_direct(spec, dopt);
    InverseConfig cfg;
    cfg.order = 16;
    InverseEngine engine(sd, cfg);
    const std::vector<double> xs{-2.3, -0.7, 0.4, 1.9, 3.3};
    bool identical = true;
    std::vector<Eigen::VectorXcd> fwd;
    for (double x : xs) fwd.push_back(engine.solve(x).blocks);
    for (std::size_t i = xs.size(); i-- > 0;) {
      const Eigen::VectorXcd again = engine.solve(xs[i]).blocks;
      identical = identical && (again == fwd[i]);
    }
    report("criterion 9: per-x solves are order independent", identical,
           identical ? "bit-identical" : "drift detected");
  }

  // criterion 10: series evaluation against adaptive integration
  {
    SppsBuildOptions bo;
    bo.order = 100;
    const SppsTable t = build_table(q, base, zeroth, bo);
    const std::size_t idx = q.grid.nearest_index(0.0);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-2.5, 2.5);
    double worst = 0;
    int used = 0;
    while (used < 10) {
      const double rho = dist(rng);
      if (std::abs(rho) < 0.05) continue;
      ++used;
      const Vec2 mine = evaluate_jost(t, rho_to_z(cplx(rho, 0.0)), JostKind::phi, idx);
      const auto ref = testing::jost_phi_by_ode(q, cplx(rho, 0.0), q.grid.x(idx));
      worst = std::max(worst, std::abs(mine[0] - ref[0]));
      worst = std::max(worst, std::abs(mine[1] - ref[1]));
    }
    report_bound("criterion 10: series vs adaptive integration (10 random rho)", worst,
                 1e-8);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string tier = "fast";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--tier") == 0 && i + 1 < argc) tier = argv[i + 1];
  }
  if (tier == "fast") {
    run_fast_tier();
  } else if (tier == "paper") {
    run_paper_tier();
  } else if (tier == "slow") {
    run_slow_tier();
  } else if (tier == "all") {
    run_fast_tier();
    run_paper_tier();
    run_slow_tier();
  } else {
    std::fprintf(stderr, "unknown tier: %s (use fast | paper | slow | all)\n",
                 tier.c_str());
    return 2;
  }
  std::printf("%s tier: %d failure(s)\n", tier.c_str(), g_failures);
  return g_failures;
}
