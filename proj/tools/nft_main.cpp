// Command-line front end for the nft shared library: direct transform,
// spectrum evolution, inversion, the full pipeline, and benchmark validation.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "nft.h"

namespace {

struct PotentialFlags {
  std::string kind = "zero";
  std::string file;
  double A = 0, gamma = 0, alpha = 0, beta = 0, delta = 0, theta = 0, sigma = 0, mu = 0;
  CLI::Option *oA = nullptr, *ogamma = nullptr, *oalpha = nullptr, *obeta = nullptr,
              *odelta = nullptr, *otheta = nullptr, *osigma = nullptr, *omu = nullptr;
};

struct DirectFlags {
  int order = 160;
  double nodes_per_unit = 1500.0;
  int K = 5000;
  std::string domain;  // "lo:hi"
};

struct InverseFlags {
  int order = 50;
  double x_step = 0.01;
  std::string domain;
};

void add_potential_flags(CLI::App* cmd, PotentialFlags& p) {
  cmd->add_option("--potential", p.kind,
                  "zero | chirped-sech | soliton | chirped-gaussian | rational-tail | file")
      ->default_val("zero");
  cmd->add_option("--file", p.file, "CSV samples for --potential file");
  p.oA = cmd->add_option("--A", p.A, "amplitude");
  p.ogamma = cmd->add_option("--gamma", p.gamma, "chirp strength");
  p.oalpha = cmd->add_option("--alpha", p.alpha, "soliton velocity parameter");
  p.obeta = cmd->add_option("--beta", p.beta, "soliton amplitude parameter");
  p.odelta = cmd->add_option("--delta", p.delta, "soliton offset");
  p.otheta = cmd->add_option("--theta", p.theta, "soliton phase");
  p.osigma = cmd->add_option("--sigma", p.sigma, "gaussian width");
  p.omu = cmd->add_option("--mu", p.mu, "carrier frequency");
}

void add_direct_flags(CLI::App* cmd, DirectFlags& d) {
  cmd->add_option("--N-direct", d.order, "series truncation for the direct stage")
      ->default_val(160);
  cmd->add_option("--nodes-per-unit", d.nodes_per_unit, "spatial grid density")
      ->default_val(1500.0);
  cmd->add_option("--K", d.K, "number of rho samples")->default_val(5000);
  cmd->add_option("--domain", d.domain, "truncation interval lo:hi (default: automatic)");
}

void add_inverse_flags(CLI::App* cmd, InverseFlags& i) {
  cmd->add_option("--N-inverse", i.order, "series truncation for the inverse stage")
      ->default_val(50);
  cmd->add_option("--x-step", i.x_step, "recovery grid step")->default_val(0.01);
}

[[noreturn]] void die(const std::string& command, nft_status status,
                      const std::string& message) {
  std::string text = message;
  for (char& c : text)
    if (c == '"') c = '\'';
  std::fprintf(stderr, "{\"error\":{\"command\":\"%s\",\"status\":%d,\"message\":\"%s\"}}\n",
               command.c_str(), static_cast<int>(status), text.c_str());
  std::exit(1);
}

void check(nft_status st, const std::string& command) {
  if (st != NFT_OK) die(command, st, nft_last_error());
}

bool parse_domain(const std::string& text, double& lo, double& hi) {
  if (text.empty()) return false;
  const auto colon = text.find(':');
  if (colon == std::string::npos) die("domain", NFT_ERROR_INVALID_ARGUMENT,
                                      "--domain expects lo:hi");
  try {
    lo = std::stod(text.substr(0, colon));
    hi = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    die("domain", NFT_ERROR_INVALID_ARGUMENT, "--domain expects numeric lo:hi");
  }
  return true;
}

using PotentialHandle = std::unique_ptr<nft_potential, decltype(&nft_potential_free)>;
using ScatteringHandle = std::unique_ptr<nft_scattering, decltype(&nft_scattering_free)>;
using SolutionHandle = std::unique_ptr<nft_solution, decltype(&nft_solution_free)>;

PotentialHandle make_potential(const PotentialFlags& p, const std::string& command) {
  if (p.kind == "file") {
    if (p.file.empty())
      die(command, NFT_ERROR_INVALID_ARGUMENT, "--potential file requires --file");
    nft_potential* raw = nullptr;
    check(nft_potential_load_csv(p.file.c_str(), &raw), command);
    return PotentialHandle(raw, &nft_potential_free);
  }
  std::vector<const char*> names;
  std::vector<double> values;
  auto maybe = [&](const CLI::Option* opt, const char* name, double v) {
    if (opt && opt->count() > 0) {
      names.push_back(name);
      values.push_back(v);
    }
  };
  maybe(p.oA, "A", p.A);
  maybe(p.ogamma, "gamma", p.gamma);
  maybe(p.oalpha, "alpha", p.alpha);
  maybe(p.obeta, "beta", p.beta);
  maybe(p.odelta, "delta", p.delta);
  maybe(p.otheta, "theta", p.theta);
  maybe(p.osigma, "sigma", p.sigma);
  maybe(p.omu, "mu", p.mu);
  nft_potential* raw = nullptr;
  check(nft_potential_create(p.kind.c_str(), names.data(), values.data(), names.size(),
                             &raw),
        command);
  return PotentialHandle(raw, &nft_potential_free);
}

ScatteringHandle run_direct_stage(const PotentialFlags& p, const DirectFlags& d,
                                  const std::string& command) {
  PotentialHandle pot = make_potential(p, command);
  nft_direct_options opt;
  nft_direct_options_init(&opt);
  opt.order = d.order;
  opt.nodes_per_unit = d.nodes_per_unit;
  opt.rho_count = d.K;
  double lo, hi;
  if (parse_domain(d.domain, lo, hi)) {
    opt.x_min = lo;
    opt.x_max = hi;
  }
  nft_scattering* raw = nullptr;
  check(nft_direct(pot.get(), &opt, &raw), command);
  return ScatteringHandle(raw, &nft_scattering_free);
}

void print_spectrum_summary(const nft_scattering* sd) {
  std::printf("t = %.17g, samples = %zu, unitarity defect = %.3e\n",
              nft_scattering_time(sd), nft_scattering_sample_count(sd),
              nft_scattering_unitarity_defect(sd));
  const size_t M = nft_scattering_eigenvalue_count(sd);
  std::printf("eigenvalues: %zu\n", M);
  for (size_t m = 0; m < M; ++m) {
    double rr, ri, cr, ci;
    nft_scattering_eigenvalue(sd, m, &rr, &ri, &cr, &ci);
    std::printf("  rho_%zu = %.15g %+.15gi   c_%zu = %.15g %+.15gi\n", m + 1, rr, ri,
                m + 1, cr, ci);
  }
}

void print_solution_summary(const nft_solution* sol) {
  const size_t n = nft_solution_point_count(sol);
  std::vector<double> residuals(n, 0.0);
  nft_solution_residuals(sol, residuals.data());
  double worst = 0, sum = 0;
  for (double r : residuals) {
    worst = std::max(worst, r);
    sum += r;
  }
  std::printf("  points = %zu, residual max = %.3e mean = %.3e, wronskian spread = %.3e\n",
              n, worst, n ? sum / n : 0.0, nft_solution_wronskian_spread(sol));
}

SolutionHandle invert_stage(const nft_scattering* sd, const InverseFlags& i,
                            const std::string& command) {
  nft_inverse_options opt;
  nft_inverse_options_init(&opt);
  opt.order = i.order;
  opt.x_step = i.x_step;
  double lo, hi;
  if (parse_domain(i.domain, lo, hi)) {
    opt.x_min = lo;
    opt.x_max = hi;
  }
  nft_solution* raw = nullptr;
  check(nft_invert(sd, &opt, &raw), command);
  return SolutionHandle(raw, &nft_solution_free);
}

std::string time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlinear Fourier transform for the focusing NLSE"};
  app.require_subcommand(1);
  // config keys live in a section per subcommand: [solve] / [direct] / ...
  app.set_config("--config", "", "configuration file with [subcommand] sections");

  PotentialFlags pot_direct, pot_solve;
  DirectFlags dir_direct, dir_solve;
  InverseFlags inv_invert, inv_solve;
  std::string out_direct = "scattering.json";
  std::string in_evolve, out_evolve = "scattering";
  std::string in_invert, out_invert = "solution.csv";
  std::string out_solve = "nft_out";
  std::vector<double> times_evolve, times_solve;
  int example_id = 1;
  bool quick = false;

  CLI::App* cmd_direct = app.add_subcommand("direct", "compute scattering data at t = 0");
  add_potential_flags(cmd_direct, pot_direct);
  add_direct_flags(cmd_direct, dir_direct);
  cmd_direct->add_option("--out", out_direct, "output scattering-data file")
      ->default_val("scattering.json");

  CLI::App* cmd_evolve = app.add_subcommand("evolve", "advance scattering data in time");
  cmd_evolve->add_option("--scattering", in_evolve, "input scattering-data file")
      ->required();
  cmd_evolve->add_option("--times", times_evolve, "target times t1,t2,...")
      ->required()
      ->delimiter(',');
  cmd_evolve->add_option("--out", out_evolve, "output file prefix")
      ->default_val("scattering");

  CLI::App* cmd_invert = app.add_subcommand("invert", "recover q from scattering data");
  cmd_invert->add_option("--scattering", in_invert, "input scattering-data file")
      ->required();
  add_inverse_flags(cmd_invert, inv_invert);
  cmd_invert->add_option("--domain", inv_invert.domain, "recovery interval lo:hi");
  cmd_invert->add_option("--out", out_invert, "output CSV file")
      ->default_val("solution.csv");

  CLI::App* cmd_solve =
      app.add_subcommand("solve", "direct transform, evolution, and inversion");
  add_potential_flags(cmd_solve, pot_solve);
  add_direct_flags(cmd_solve, dir_solve);
  add_inverse_flags(cmd_solve, inv_solve);
  cmd_solve->add_option("--times", times_solve, "solution times t1,t2,...")
      ->required()
      ->delimiter(',');
  cmd_solve->add_option("--out", out_solve, "output file prefix")->default_val("nft_out");

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "run a built-in benchmark example");
  cmd_validate->add_option("example", example_id, "example id 1..4")->required();
  cmd_validate->add_flag("--quick", quick, "reduced settings smoke run");

  CLI11_PARSE(app, argc, argv);

  if (cmd_direct->parsed()) {
    ScatteringHandle sd = run_direct_stage(pot_direct, dir_direct, "direct");
    print_spectrum_summary(sd.get());
    check(nft_scattering_save(sd.get(), out_direct.c_str()), "direct");
    std::printf("wrote %s\n", out_direct.c_str());
    return 0;
  }

  if (cmd_evolve->parsed()) {
    nft_scattering* raw = nullptr;
    check(nft_scattering_load(in_evolve.c_str(), &raw), "evolve");
    ScatteringHandle sd(raw, &nft_scattering_free);
    const double t0 = nft_scattering_time(sd.get());
    for (double t : times_evolve) {
      nft_scattering* evolved = nullptr;
      check(nft_scattering_evolve(sd.get(), t - t0, &evolved), "evolve");
      ScatteringHandle out(evolved, &nft_scattering_free);
      const std::string path = out_evolve + "_t" + time_tag(t) + ".json";
      check(nft_scattering_save(out.get(), path.c_str()), "evolve");
      std::printf("wrote %s\n", path.c_str());
    }
    return 0;
  }

  if (cmd_invert->parsed()) {
    nft_scattering* raw = nullptr;
    check(nft_scattering_load(in_invert.c_str(), &raw), "invert");
    ScatteringHandle sd(raw, &nft_scattering_free);
    print_spectrum_summary(sd.get());
    SolutionHandle sol = invert_stage(sd.get(), inv_invert, "invert");
    print_solution_summary(sol.get());
    check(nft_solution_save_csv(sol.get(), out_invert.c_str()), "invert");
    std::printf("wrote %s\n", out_invert.c_str());
    return 0;
  }

  if (cmd_solve->parsed()) {
    ScatteringHandle sd0 = run_direct_stage(pot_solve, dir_solve, "solve");
    print_spectrum_summary(sd0.get());
    for (double t : times_solve) {
      nft_scattering* evolved = nullptr;
      check(nft_scattering_evolve(sd0.get(), t, &evolved), "solve");
      ScatteringHandle sdt(evolved, &nft_scattering_free);
      const std::string sd_path = out_solve + "_sd_t" + time_tag(t) + ".json";
      check(nft_scattering_save(sdt.get(), sd_path.c_str()), "solve");
      SolutionHandle sol = invert_stage(sdt.get(), inv_solve, "solve");
      const std::string q_path = out_solve + "_q_t" + time_tag(t) + ".csv";
      check(nft_solution_save_csv(sol.get(), q_path.c_str()), "solve");
      std::printf("t = %g:\n", t);
      print_solution_summary(sol.get());
      std::printf("  wrote %s and %s\n", sd_path.c_str(), q_path.c_str());
    }
    return 0;
  }

  if (cmd_validate->parsed()) {
    char* report = nullptr;
    check(nft_validate_example(example_id, quick ? 1 : 0, &report), "validate");
    std::printf("%s\n", report);
    nft_string_free(report);
    return 0;
  }

  return 0;
}
