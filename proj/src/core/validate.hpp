// End-to-end validation of the four built-in benchmark potentials against
// closed-form references and recorded regression values.
#pragma once

#include <string>
#include <vector>

#include "core/scattering_data.hpp"

namespace nft {

struct ValidateCheck {
  std::string name;
  double measured = 0;
  double bound = 0;        // upper bound, or upper edge of an interval check
  double lower_bound = 0;  // nonzero only for interval checks
  bool pass = false;
};

struct ValidateReport {
  int example_id = 0;
  std::vector<ValidateCheck> checks;
  double seconds = 0;

  bool all_pass() const;
  std::string to_json() const;
};

/// Zero values mean "use the example's reference settings".
struct ValidateOptions {
  double nodes_per_unit = 0;
  std::size_t rho_count = 0;
  int order_direct = 0;
  int order_inverse = 0;
  double x_step = 0;
  bool inverse_checks = true;
};

/// Runs benchmark example 1..4 and reports measured errors against the
/// per-example bounds. Failures are report entries, not exceptions.
ValidateReport validate_example(int example_id, const ValidateOptions& opt = {});

}  // namespace nft
