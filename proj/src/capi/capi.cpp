// C API implementation: opaque handles over the core library, exceptions
// mapped to status codes with a thread-local message.
#include "nft.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <map>
#include <string>

#include "core/direct.hpp"
#include "core/errors.hpp"
#include "core/evolution.hpp"
#include "core/inverse.hpp"
#include "core/validate.hpp"

namespace {

thread_local std::string g_last_error;

nft_status status_of(nft::errc code) {
  using nft::errc;
  switch (code) {
    case errc::invalid_grid:
    case errc::invalid_spec:
    case errc::configuration:
      return NFT_ERROR_INVALID_ARGUMENT;
    case errc::parse:
    case errc::ingestion:
      return NFT_ERROR_PARSE;
    case errc::domain:
    case errc::domain_selection:
    case errc::pole:
      return NFT_ERROR_DOMAIN;
    case errc::base_solve:
    case errc::singular_base:
    case errc::instability:
    case errc::numeric:
    case errc::degenerate_eigenvector:
    case errc::ill_conditioned:
    case errc::recovery_singularity:
      return NFT_ERROR_NUMERIC;
    case errc::io:
      return NFT_ERROR_IO;
  }
  return NFT_ERROR_INTERNAL;
}

template <typename Fn>
nft_status guarded(Fn&& fn) {
  try {
    fn();
    return NFT_OK;
  } catch (const nft::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NFT_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return NFT_ERROR_INTERNAL;
  }
}

nft_status invalid(const char* what) {
  g_last_error = what;
  return NFT_ERROR_INVALID_ARGUMENT;
}

}  // namespace

struct nft_potential {
  nft::PotentialSpec spec;
};

struct nft_scattering {
  nft::ScatteringData sd;
};

struct nft_solution {
  nft::InverseSolveResult result;
  double time = 0;
};

extern "C" {

const char* nft_version(void) { return "0.1.0"; }

const char* nft_last_error(void) { return g_last_error.c_str(); }

void nft_string_free(char* s) { delete[] s; }

nft_status nft_potential_create(const char* kind, const char* const* param_names,
                                const double* param_values, size_t param_count,
                                nft_potential** out) {
  if (!kind || !out || (param_count > 0 && (!param_names || !param_values)))
    return invalid("nft_potential_create: null argument");
  *out = nullptr;
  return guarded([&] {
    std::map<std::string, double> params;
    for (size_t i = 0; i < param_count; ++i) {
      nft::require(param_names[i] != nullptr, nft::errc::invalid_spec,
                   "parameter name is null");
      params[param_names[i]] = param_values[i];
    }
    auto spec = nft::PotentialSpec::from_kind_name(kind, params);
    *out = new nft_potential{std::move(spec)};
  });
}

nft_status nft_potential_load_csv(const char* path, nft_potential** out) {
  if (!path || !out) return invalid("nft_potential_load_csv: null argument");
  *out = nullptr;
  return guarded([&] {
    auto spec = nft::PotentialSpec::from_file(path);
    nft::parse_potential_csv(path);  // fail early on malformed files
    *out = new nft_potential{std::move(spec)};
  });
}

void nft_potential_free(nft_potential* p) { delete p; }

void nft_direct_options_init(nft_direct_options* opt) {
  if (!opt) return;
  opt->order = 160;
  opt->nodes_per_unit = 1500.0;
  opt->rho_count = 5000;
  opt->rho_min = 1e-3;
  opt->rho_max = 70.0;
  opt->x_min = 0.0;
  opt->x_max = 0.0;
  opt->tail_threshold = 1e-7;
}

nft_status nft_direct(const nft_potential* p, const nft_direct_options* opt,
                      nft_scattering** out) {
  if (!p || !out) return invalid("nft_direct: null argument");
  *out = nullptr;
  return guarded([&] {
    nft::DirectOptions d;
    if (opt) {
      if (opt->order > 0) d.order = opt->order;
      if (opt->nodes_per_unit > 0) d.nodes_per_unit = opt->nodes_per_unit;
      if (opt->rho_count > 0) d.rho.count = static_cast<std::size_t>(opt->rho_count);
      if (opt->rho_min > 0) d.rho.rho_min = opt->rho_min;
      if (opt->rho_max > 0) d.rho.rho_max = opt->rho_max;
      if (opt->x_min < opt->x_max) d.domain = std::make_pair(opt->x_min, opt->x_max);
      if (opt->tail_threshold > 0) d.tail_threshold = opt->tail_threshold;
    }
    *out = new nft_scattering{nft::run_direct(p->spec, d)};
  });
}

nft_status nft_scattering_evolve(const nft_scattering* sd, double dt,
                                 nft_scattering** out) {
  if (!sd || !out) return invalid("nft_scattering_evolve: null argument");
  *out = nullptr;
  return guarded([&] { *out = new nft_scattering{nft::evolve(sd->sd, dt)}; });
}

size_t nft_scattering_sample_count(const nft_scattering* sd) {
  return sd ? sd->sd.sample_count() : 0;
}

size_t nft_scattering_eigenvalue_count(const nft_scattering* sd) {
  return sd ? sd->sd.eigenvalue_count() : 0;
}

double nft_scattering_time(const nft_scattering* sd) {
  return sd ? sd->sd.meta.time : 0.0;
}

double nft_scattering_unitarity_defect(const nft_scattering* sd) {
  return sd ? sd->sd.meta.unitarity_defect : 0.0;
}

nft_status nft_scattering_samples(const nft_scattering* sd, double* rho, double* a_re,
                                  double* a_im, double* b_re, double* b_im) {
  if (!sd) return invalid("nft_scattering_samples: null handle");
  for (size_t k = 0; k < sd->sd.sample_count(); ++k) {
    if (rho) rho[k] = sd->sd.rho[k];
    if (a_re) a_re[k] = sd->sd.a[k].real();
    if (a_im) a_im[k] = sd->sd.a[k].imag();
    if (b_re) b_re[k] = sd->sd.b[k].real();
    if (b_im) b_im[k] = sd->sd.b[k].imag();
  }
  return NFT_OK;
}

nft_status nft_scattering_eigenvalue(const nft_scattering* sd, size_t m, double* rho_re,
                                     double* rho_im, double* c_re, double* c_im) {
  if (!sd) return invalid("nft_scattering_eigenvalue: null handle");
  if (m >= sd->sd.eigenvalue_count())
    return invalid("nft_scattering_eigenvalue: index out of range");
  if (rho_re) *rho_re = sd->sd.eigenvalues[m].real();
  if (rho_im) *rho_im = sd->sd.eigenvalues[m].imag();
  if (c_re) *c_re = sd->sd.norming_constants[m].real();
  if (c_im) *c_im = sd->sd.norming_constants[m].imag();
  return NFT_OK;
}

nft_status nft_scattering_save(const nft_scattering* sd, const char* path) {
  if (!sd || !path) return invalid("nft_scattering_save: null argument");
  return guarded([&] { nft::save_scattering(sd->sd, path); });
}

nft_status nft_scattering_load(const char* path, nft_scattering** out) {
  if (!path || !out) return invalid("nft_scattering_load: null argument");
  *out = nullptr;
  return guarded([&] { *out = new nft_scattering{nft::load_scattering(path)}; });
}

void nft_scattering_free(nft_scattering* sd) { delete sd; }

void nft_inverse_options_init(nft_inverse_options* opt) {
  if (!opt) return;
  opt->order = 50;
  opt->sample_limit = 0;
  opt->x_min = 0.0;
  opt->x_max = 0.0;
  opt->x_step = 0.01;
  opt->regularization = 0.0;
  opt->refine_steps = 1;
}

nft_status nft_invert(const nft_scattering* sd, const nft_inverse_options* opt,
                      nft_solution** out) {
  if (!sd || !out) return invalid("nft_invert: null argument");
  *out = nullptr;
  return guarded([&] {
    nft::InverseConfig cfg;
    if (opt) {
      if (opt->order > 0) cfg.order = opt->order;
      if (opt->sample_limit > 0) cfg.sample_limit = static_cast<std::size_t>(opt->sample_limit);
      if (opt->x_min < opt->x_max) {
        cfg.x_min = opt->x_min;
        cfg.x_max = opt->x_max;
      }
      if (opt->x_step > 0) cfg.x_step = opt->x_step;
      if (opt->regularization > 0) cfg.regularization = opt->regularization;
      if (opt->refine_steps >= 0) cfg.refine_steps = opt->refine_steps;
    }
    auto result = nft::run_inverse(sd->sd, cfg);
    *out = new nft_solution{std::move(result), sd->sd.meta.time};
  });
}

size_t nft_solution_point_count(const nft_solution* s) {
  return s ? s->result.q_recovered.size() : 0;
}

nft_status nft_solution_values(const nft_solution* s, double* x, double* q_re,
                               double* q_im) {
  if (!s) return invalid("nft_solution_values: null handle");
  const auto& q = s->result.q_recovered;
  for (size_t i = 0; i < q.size(); ++i) {
    if (x) x[i] = q.grid.x(i);
    if (q_re) q_re[i] = q[i].real();
    if (q_im) q_im[i] = q[i].imag();
  }
  return NFT_OK;
}

nft_status nft_solution_residuals(const nft_solution* s, double* per_x) {
  if (!s || !per_x) return invalid("nft_solution_residuals: null argument");
  for (size_t i = 0; i < s->result.ls_residuals.size(); ++i)
    per_x[i] = s->result.ls_residuals[i];
  return NFT_OK;
}

double nft_solution_wronskian_spread(const nft_solution* s) {
  return s ? s->result.wronskian_epsilon : 0.0;
}

double nft_solution_time(const nft_solution* s) { return s ? s->time : 0.0; }

nft_status nft_solution_save_csv(const nft_solution* s, const char* path) {
  if (!s || !path) return invalid("nft_solution_save_csv: null argument");
  return guarded([&] {
    std::FILE* f = std::fopen(path, "w");
    nft::require(f != nullptr, nft::errc::io, std::string("cannot open: ") + path);
    std::fprintf(f, "x,re_q,im_q,abs_q\n");
    const auto& q = s->result.q_recovered;
    for (size_t i = 0; i < q.size(); ++i) {
      std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", q.grid.x(i), q[i].real(), q[i].imag(),
                   std::abs(q[i]));
    }
    std::fclose(f);
  });
}

void nft_solution_free(nft_solution* s) { delete s; }

nft_status nft_validate_example(int example_id, int quick, char** report_json) {
  if (!report_json) return invalid("nft_validate_example: null output");
  *report_json = nullptr;
  return guarded([&] {
    nft::ValidateOptions opt;
    if (quick) {
      opt.nodes_per_unit = 80;
      opt.rho_count = 400;
      opt.order_direct = 40;
      opt.order_inverse = 20;
      opt.x_step = 0.1;
      opt.inverse_checks = false;
    }
    const std::string text = nft::validate_example(example_id, opt).to_json();
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *report_json = buf;
  });
}

}  // extern "C"
