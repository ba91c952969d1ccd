// Benchmark initial conditions, ingestion of sampled potentials, and
// truncation-domain selection.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/grid.hpp"

namespace nft {

enum class PotentialKind {
  zero,
  chirped_sech,      // -i A sech(x) exp(-i gamma A ln cosh x)
  soliton,           // 2 beta sech(2 beta x - delta) exp(-i (2 alpha x + theta))
  chirped_gaussian,  // A exp(i mu x) exp(-x^2 / sigma)
  rational_tail,     // A exp(i mu x) / (x + i)^4
  from_file,         // three-column CSV: x, Re q, Im q
};

struct PotentialSpec {
  PotentialKind kind = PotentialKind::zero;
  std::map<std::string, double> params;
  std::string file_path;

  static PotentialSpec zero();
  static PotentialSpec chirped_sech(double A, double gamma);
  static PotentialSpec soliton(double alpha, double beta, double delta, double theta);
  static PotentialSpec chirped_gaussian(double A, double sigma, double mu);
  static PotentialSpec rational_tail(double A, double mu);
  static PotentialSpec from_file(std::string path);
  static PotentialSpec from_kind_name(const std::string& name,
                                      const std::map<std::string, double>& params,
                                      const std::string& file_path = {});

  /// Throws errc::invalid_spec when required parameters are missing or out of range.
  void check() const;

  double param(const std::string& name) const;

  /// Closed-form value; not available for from_file.
  cplx value(double x) const;
};

struct TruncatedDomain {
  double x_min = 0;
  double x_max = 0;
  double tail_threshold = 0;
};

/// Samples the potential on the grid. from_file samples are spline-interpolated.
GridFunction evaluate(const PotentialSpec& spec, const UniformGrid& grid);

/// Smallest member of the fixed symmetric ladder {12, 25, 50, 100, 200} whose
/// endpoints satisfy |q0| <= tail_threshold. from_file specs return the file's
/// own span after the same endpoint check.
TruncatedDomain select_domain(const PotentialSpec& spec, double tail_threshold);

struct ClassQReport {
  double l1_weighted = 0;  // integral of (1+|x|^k) |q|
  double l2_weighted = 0;  // sqrt of integral of ((1+|x|^k) |q|)^2
  double tail_fraction = 0;
  bool decay_suspect = false;
};

/// Weighted-norm diagnostic for the admissibility class; advisory only.
ClassQReport check_class_q(const GridFunction& q, int k);

/// Samples parsed from a potential CSV file (x strictly increasing).
struct PotentialSamples {
  std::vector<double> x;
  std::vector<cplx> q;
};
PotentialSamples parse_potential_csv(const std::string& path);

}  // namespace nft
