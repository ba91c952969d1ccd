// Error taxonomy shared by the core library and surfaced through the C API.
#pragma once

#include <stdexcept>
#include <string>

namespace nft {

enum class errc {
  invalid_grid,
  invalid_spec,
  ingestion,
  domain_selection,
  base_solve,
  singular_base,
  instability,
  pole,
  domain,
  numeric,
  degenerate_eigenvector,
  configuration,
  ill_conditioned,
  recovery_singularity,
  parse,
  io,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace nft
