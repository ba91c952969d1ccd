#include "core/validate.hpp"

#include <chrono>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <numbers>

#include "core/direct.hpp"
#include "core/evolution.hpp"
#include "core/inverse.hpp"
#include "core/oracles.hpp"
#include "core/potentials.hpp"

namespace nft {
namespace {

struct ExampleSetup {
  PotentialSpec spec;
  double half_width = 12.0;
  int order_direct = 160;
  int order_inverse = 50;
  double x_step = 0.01;
};

ExampleSetup example_setup(int id) {
  switch (id) {
    case 1:
      // sech tails keep |q(12)| near 1.2e-5; the closed-form comparison needs
      // the domain the ladder picks at the default threshold. a(i/2) ~ 1.3e-3
      // makes the recovery division delicate, so the inversion runs longer
      // series than the global default.
      return {PotentialSpec::chirped_sech(1.0, 0.1), 25.0, 160, 80, 0.01};
    case 2:
      return {PotentialSpec::soliton(0.5, std::numbers::pi / 2.0, 0.1, 0.1), 12.0, 60, 50,
              0.01};
    case 3:
      // the stronger potential needs a longer unknown series in the inversion
      return {PotentialSpec::chirped_gaussian(2.5, 2.0, 1.0), 12.0, 160, 80, 0.01};
    case 4:
      // wide, slowly decaying tails; the recovery grid is coarser
      return {PotentialSpec::rational_tail(std::numbers::pi / 2.0, 1.0), 200.0, 250, 50,
              0.1};
    default:
      fail(errc::configuration, "example id must be 1..4");
  }
}

void push(ValidateReport& rep, const std::string& name, double measured, double bound,
          double lower = 0.0) {
  ValidateCheck c;
  c.name = name;
  c.measured = measured;
  c.bound = bound;
  c.lower_bound = lower;
  c.pass = std::isfinite(measured) && measured <= bound && measured >= lower;
  rep.checks.push_back(c);
}

double eigen_error(const ScatteringData& sd, std::size_t m, cplx ref) {
  if (sd.eigenvalues.size() <= m) return std::numeric_limits<double>::infinity();
  return std::abs(sd.eigenvalues[m] - ref);
}

double norming_error(const ScatteringData& sd, std::size_t m, cplx ref) {
  if (sd.norming_constants.size() <= m) return std::numeric_limits<double>::infinity();
  return std::abs(sd.norming_constants[m] - ref);
}

double recovery_error(const InverseSolveResult& inv, const ExampleSetup& ex, double t) {
  double worst = 0;
  for (std::size_t i = 0; i < inv.q_recovered.size(); ++i) {
    const double x = inv.q_recovered.grid.x(i);
    cplx ref;
    if (ex.spec.kind == PotentialKind::soliton && t != 0.0) {
      ref = soliton_solution(ex.spec.param("alpha"), ex.spec.param("beta"),
                             ex.spec.param("delta"), ex.spec.param("theta"), x, t);
    } else {
      ref = ex.spec.value(x);
    }
    worst = std::max(worst, std::abs(inv.q_recovered[i] - ref));
  }
  return worst;
}

}  // namespace

bool ValidateReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ValidateReport::to_json() const {
  nlohmann::json j;
  j["example"] = example_id;
  j["pass"] = all_pass();
  j["seconds"] = seconds;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["measured"] = c.measured;
    e["bound"] = c.bound;
    if (c.lower_bound > 0) e["lower_bound"] = c.lower_bound;
    e["pass"] = c.pass;
    j["checks"].push_back(e);
  }
  return j.dump(1);
}

ValidateReport validate_example(int example_id, const ValidateOptions& opt) {
  const auto t_start = std::chrono::steady_clock::now();
  ExampleSetup ex = example_setup(example_id);

  DirectOptions dopt;
  dopt.order = opt.order_direct > 0 ? opt.order_direct : ex.order_direct;
  dopt.nodes_per_unit = opt.nodes_per_unit > 0 ? opt.nodes_per_unit : 1500.0;
  dopt.rho.count = opt.rho_count > 0 ? opt.rho_count : 5000;
  dopt.domain = std::make_pair(-ex.half_width, ex.half_width);

  InverseConfig icfg;
  icfg.order = opt.order_inverse > 0 ? opt.order_inverse : ex.order_inverse;
  icfg.x_step = opt.x_step > 0 ? opt.x_step : ex.x_step;

  ValidateReport rep;
  rep.example_id = example_id;

  const ScatteringData sd = run_direct(ex.spec, dopt);

  switch (example_id) {
    case 1: {
      const ChirpedSechParams p{1.0, 0.1};
      double aerr = 0, berr = 0;
      for (std::size_t k = 0; k < sd.rho.size(); ++k) {
        const cplx rho(sd.rho[k], 0.0);
        aerr = std::max(aerr, std::abs(sd.a[k] - analytic_a_chirped_sech(p, rho)));
        berr = std::max(berr, std::abs(sd.b[k] - analytic_b_chirped_sech(p, rho)));
      }
      push(rep, "max |a - a_ref| on the rho grid", aerr, 1e-8);
      push(rep, "max |b - b_ref| on the rho grid", berr, 1e-8);
      push(rep, "eigenvalue count",
           std::abs(static_cast<double>(sd.eigenvalues.size()) - p.eigenvalue_count()),
           0.0);
      push(rep, "|rho_1 - 0.498749217771909i|",
           eigen_error(sd, 0, cplx(0.0, 0.498749217771909)), 1e-10);
      push(rep, "|c_1 - c_ref|",
           norming_error(sd, 0, cplx(-0.0192926642392854, -0.999813879232805)), 1e-8);
      push(rep, "unitarity defect", sd.unitarity_defect(), 1e-8);
      if (opt.inverse_checks) {
        const InverseSolveResult inv = run_inverse(sd, icfg);
        push(rep, "recovery error at t=0", recovery_error(inv, ex, 0.0), 5e-3);
      }
      break;
    }
    case 2: {
      const double beta = std::numbers::pi / 2.0;
      push(rep, "eigenvalue count",
           std::abs(static_cast<double>(sd.eigenvalues.size()) - 1.0), 0.0);
      push(rep, "|rho_1 - (0.5 + i pi/2)|", eigen_error(sd, 0, cplx(0.5, beta)), 1e-10);
      push(rep, "unitarity defect", sd.unitarity_defect(), 1e-8);
      if (opt.inverse_checks) {
        for (double t : {0.0, 1.0, 2.0}) {
          const ScatteringData sdt = (t == 0.0) ? sd : evolve(sd, t);
          const InverseSolveResult inv = run_inverse(sdt, icfg);
          push(rep, "recovery error at t=" + std::to_string(t),
               recovery_error(inv, ex, t), 1e-4);
        }
      }
      break;
    }
    case 3: {
      push(rep, "eigenvalue count",
           std::abs(static_cast<double>(sd.eigenvalues.size()) - 2.0), 0.0);
      push(rep, "|rho_1 - ref|",
           eigen_error(sd, 0, cplx(-0.500000000000079, 1.97126262533634)), 1e-6);
      push(rep, "|rho_2 - ref|",
           eigen_error(sd, 1, cplx(-0.499999999999999, 0.792849539875588)), 1e-6);
      push(rep, "|c_1 + 1|", norming_error(sd, 0, cplx(-1.0, 0.0)), 1e-8);
      push(rep, "|c_2 - 1|", norming_error(sd, 1, cplx(1.0, 0.0)), 1e-8);
      push(rep, "unitarity defect", sd.unitarity_defect(), 1e-8);
      if (opt.inverse_checks) {
        const InverseSolveResult inv = run_inverse(sd, icfg);
        push(rep, "recovery error at t=0", recovery_error(inv, ex, 0.0), 1e-2);
      }
      break;
    }
    case 4: {
      push(rep, "eigenvalue count",
           std::abs(static_cast<double>(sd.eigenvalues.size()) - 1.0), 0.0);
      push(rep, "|rho_1 - ref|",
           eigen_error(sd, 0, cplx(-2.205978998465, 0.485112496978116)), 1e-6);
      push(rep, "|c_1 + 1|", norming_error(sd, 0, cplx(-1.0, 0.0)), 1e-8);
      push(rep, "unitarity defect", sd.unitarity_defect(), 1e-4);
      if (opt.inverse_checks) {
        const double refs[3] = {0.11, 0.08, 0.03};
        const double times[3] = {0.0, 1.2, 2.5};
        for (int i = 0; i < 3; ++i) {
          const ScatteringData sdt = (times[i] == 0.0) ? sd : evolve(sd, times[i]);
          const InverseSolveResult inv = run_inverse(sdt, icfg);
          push(rep, "Wronskian spread at t=" + std::to_string(times[i]),
               inv.wronskian_epsilon, refs[i] * 3.0, refs[i] / 3.0);
        }
      }
      break;
    }
    default:
      fail(errc::configuration, "example id must be 1..4");
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
                    .count();
  return rep;
}

}  // namespace nft
