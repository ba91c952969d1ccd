#include "core/potentials.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/quadrature.hpp"
#include "core/spline.hpp"

namespace nft {
namespace {

constexpr std::array<double, 5> kDomainLadder = {12.0, 25.0, 50.0, 100.0, 200.0};

double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

// ln cosh x without overflow for large |x|
double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

void need(const PotentialSpec& s, const char* name) {
  require(s.params.count(name) != 0, errc::invalid_spec,
          std::string("potential parameter missing: ") + name);
}

}  // namespace

PotentialSpec PotentialSpec::zero() { return PotentialSpec{PotentialKind::zero, {}, {}}; }

PotentialSpec PotentialSpec::chirped_sech(double A, double gamma) {
  return PotentialSpec{PotentialKind::chirped_sech, {{"A", A}, {"gamma", gamma}}, {}};
}

PotentialSpec PotentialSpec::soliton(double alpha, double beta, double delta, double theta) {
  return PotentialSpec{
      PotentialKind::soliton,
      {{"alpha", alpha}, {"beta", beta}, {"delta", delta}, {"theta", theta}},
      {}};
}

PotentialSpec PotentialSpec::chirped_gaussian(double A, double sigma, double mu) {
  return PotentialSpec{
      PotentialKind::chirped_gaussian, {{"A", A}, {"sigma", sigma}, {"mu", mu}}, {}};
}

PotentialSpec PotentialSpec::rational_tail(double A, double mu) {
  return PotentialSpec{PotentialKind::rational_tail, {{"A", A}, {"mu", mu}}, {}};
}

PotentialSpec PotentialSpec::from_file(std::string path) {
  PotentialSpec s;
  s.kind = PotentialKind::from_file;
  s.file_path = std::move(path);
  return s;
}

PotentialSpec PotentialSpec::from_kind_name(const std::string& name,
                                            const std::map<std::string, double>& params,
                                            const std::string& file_path) {
  PotentialSpec s;
  if (name == "zero")
    s.kind = PotentialKind::zero;
  else if (name == "chirped-sech")
    s.kind = PotentialKind::chirped_sech;
  else if (name == "soliton")
    s.kind = PotentialKind::soliton;
  else if (name == "chirped-gaussian")
    s.kind = PotentialKind::chirped_gaussian;
  else if (name == "rational-tail")
    s.kind = PotentialKind::rational_tail;
  else if (name == "file")
    s.kind = PotentialKind::from_file;
  else
    fail(errc::invalid_spec, "unknown potential kind: " + name);
  s.params = params;
  s.file_path = file_path;
  s.check();
  return s;
}

void PotentialSpec::check() const {
  switch (kind) {
    case PotentialKind::zero:
      break;
    case PotentialKind::chirped_sech:
      need(*this, "A");
      need(*this, "gamma");
      require(param("A") > 0, errc::invalid_spec, "chirped-sech requires A > 0");
      break;
    case PotentialKind::soliton:
      need(*this, "alpha");
      need(*this, "beta");
      need(*this, "delta");
      need(*this, "theta");
      require(param("beta") > 0, errc::invalid_spec, "soliton requires beta > 0");
      break;
    case PotentialKind::chirped_gaussian:
      need(*this, "A");
      need(*this, "sigma");
      need(*this, "mu");
      require(param("A") > 0, errc::invalid_spec, "chirped-gaussian requires A > 0");
      require(param("sigma") > 0, errc::invalid_spec, "chirped-gaussian requires sigma > 0");
      break;
    case PotentialKind::rational_tail:
      need(*this, "A");
      need(*this, "mu");
      break;
    case PotentialKind::from_file:
      require(!file_path.empty(), errc::invalid_spec, "file potential requires a path");
      break;
  }
}

double PotentialSpec::param(const std::string& name) const {
  auto it = params.find(name);
  require(it != params.end(), errc::invalid_spec, "potential parameter missing: " + name);
  return it->second;
}

cplx PotentialSpec::value(double x) const {
  switch (kind) {
    case PotentialKind::zero:
      return 0.0;
    case PotentialKind::chirped_sech: {
      const double A = param("A"), gamma = param("gamma");
      return cplx(0.0, -1.0) * A * sech(x) * std::exp(cplx(0.0, -gamma * A * log_cosh(x)));
    }
    case PotentialKind::soliton: {
      const double alpha = param("alpha"), beta = param("beta");
      const double delta = param("delta"), theta = param("theta");
      return 2.0 * beta * sech(2.0 * beta * x - delta) *
             std::exp(cplx(0.0, -(2.0 * alpha * x + theta)));
    }
    case PotentialKind::chirped_gaussian: {
      const double A = param("A"), sigma = param("sigma"), mu = param("mu");
      return A * std::exp(cplx(0.0, mu * x)) * std::exp(-x * x / sigma);
    }
    case PotentialKind::rational_tail: {
      const double A = param("A"), mu = param("mu");
      const cplx d = cplx(x, 1.0);
      const cplx d2 = d * d;
      return A * std::exp(cplx(0.0, mu * x)) / (d2 * d2);
    }
    case PotentialKind::from_file:
      fail(errc::invalid_spec, "file potentials have no closed form; use evaluate()");
  }
  fail(errc::invalid_spec, "corrupt potential kind");
}

PotentialSamples parse_potential_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::io, "cannot open potential file: " + path);
  PotentialSamples out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string field;
    double col[3];
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(ss, field, ',')) {
        fail(errc::parse, "potential file " + path + ": line " + std::to_string(line_no) +
                              ", field " + std::to_string(c + 1) + " missing");
      }
      try {
        std::size_t used = 0;
        col[c] = std::stod(field, &used);
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
          ++used;
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        fail(errc::parse, "potential file " + path + ": line " + std::to_string(line_no) +
                              ", field " + std::to_string(c + 1) + " is not a number");
      }
    }
    if (!out.x.empty() && col[0] <= out.x.back()) {
      fail(errc::parse, "potential file " + path + ": line " + std::to_string(line_no) +
                            ": x values must increase strictly");
    }
    out.x.push_back(col[0]);
    out.q.emplace_back(col[1], col[2]);
  }
  require(out.x.size() >= 5, errc::parse,
          "potential file " + path + ": need at least 5 samples");
  return out;
}

GridFunction evaluate(const PotentialSpec& spec, const UniformGrid& grid) {
  spec.check();
  if (spec.kind != PotentialKind::from_file) {
    return GridFunction::tabulate(grid, [&](double x) { return spec.value(x); });
  }
  PotentialSamples samples = parse_potential_csv(spec.file_path);
  const double lo = samples.x.front(), hi = samples.x.back();
  require(grid.x_min() >= lo - 1e-12 && grid.x_max() <= hi + 1e-12, errc::ingestion,
          "target grid extends beyond the sampled range of " + spec.file_path);
  CubicSpline s(std::move(samples.x), std::move(samples.q));
  return GridFunction::tabulate(grid, [&](double x) { return s(x); });
}

TruncatedDomain select_domain(const PotentialSpec& spec, double tail_threshold) {
  spec.check();
  require(tail_threshold > 0, errc::domain_selection, "tail_threshold must be positive");
  if (spec.kind == PotentialKind::from_file) {
    PotentialSamples samples = parse_potential_csv(spec.file_path);
    const double lo = samples.x.front(), hi = samples.x.back();
    const double qlo = std::abs(samples.q.front()), qhi = std::abs(samples.q.back());
    require(qlo <= tail_threshold && qhi <= tail_threshold, errc::domain_selection,
            "sampled potential does not decay below the tail threshold at its endpoints");
    return TruncatedDomain{lo, hi, tail_threshold};
  }
  std::string report;
  for (double L : kDomainLadder) {
    const double tail = std::max(std::abs(spec.value(-L)), std::abs(spec.value(L)));
    if (tail <= tail_threshold) return TruncatedDomain{-L, L, tail_threshold};
    report += " |q(+-" + std::to_string(L) + ")|=" + std::to_string(tail);
  }
  fail(errc::domain_selection,
       "no ladder interval reaches the tail threshold; endpoint values:" + report);
}

ClassQReport check_class_q(const GridFunction& q, int k) {
  const auto weight = [&](double x) { return 1.0 + std::pow(std::abs(x), k); };
  GridFunction w1 = GridFunction::tabulate(q.grid, [](double) { return cplx(0.0); });
  GridFunction w2 = w1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double wi = weight(q.grid.x(i)) * std::abs(q[i]);
    w1[i] = wi;
    w2[i] = wi * wi;
  }
  ClassQReport rep;
  rep.l1_weighted = integrate(w1).real();
  rep.l2_weighted = std::sqrt(std::max(0.0, integrate(w2).real()));

  // Contribution of the outer half of the domain to the weighted L1 norm.
  const double span = q.grid.x_max() - q.grid.x_min();
  GridFunction inner = w1;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double x = q.grid.x(i);
    if (x < q.grid.x_min() + 0.25 * span || x > q.grid.x_max() - 0.25 * span) inner[i] = 0.0;
  }
  const double inner_l1 = integrate(inner).real();
  rep.tail_fraction = rep.l1_weighted > 0 ? 1.0 - inner_l1 / rep.l1_weighted : 0.0;
  rep.decay_suspect = rep.tail_fraction > 0.25;
  return rep;
}

}  // namespace nft
