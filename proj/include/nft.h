/* nft: nonlinear Fourier transform for the focusing nonlinear Schroedinger
 * equation. Direct scattering, spectrum evolution, and inverse scattering
 * behind opaque handles. All functions returning nft_status leave a
 * description of the failure in nft_last_error() (thread-local).
 */
#ifndef NFT_H
#define NFT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nft_status {
  NFT_OK = 0,
  NFT_ERROR_INVALID_ARGUMENT = 1,
  NFT_ERROR_PARSE = 2,
  NFT_ERROR_DOMAIN = 3,
  NFT_ERROR_NUMERIC = 4,
  NFT_ERROR_IO = 5,
  NFT_ERROR_INTERNAL = 6
} nft_status;

typedef struct nft_potential nft_potential;
typedef struct nft_scattering nft_scattering;
typedef struct nft_solution nft_solution;

const char *nft_version(void);

/* Message for the most recent failure on this thread. */
const char *nft_last_error(void);

void nft_string_free(char *s);

/* ------------------------------------------------------------------ */
/* potentials                                                          */

/* kind: "zero" | "chirped-sech" | "soliton" | "chirped-gaussian" |
 * "rational-tail". Parameters by name: A, gamma, alpha, beta, delta,
 * theta, sigma, mu. */
nft_status nft_potential_create(const char *kind, const char *const *param_names,
                                const double *param_values, size_t param_count,
                                nft_potential **out);

/* Three-column CSV: x, Re q, Im q with strictly increasing x. */
nft_status nft_potential_load_csv(const char *path, nft_potential **out);

void nft_potential_free(nft_potential *p);

/* ------------------------------------------------------------------ */
/* direct transform                                                    */

typedef struct nft_direct_options {
  int order;              /* series truncation; <= 0 selects 160 */
  double nodes_per_unit;  /* <= 0 selects 1500 */
  int rho_count;          /* <= 0 selects 5000 */
  double rho_min;         /* <= 0 selects 1e-3 */
  double rho_max;         /* <= 0 selects 70 */
  double x_min, x_max;    /* x_min >= x_max: automatic domain selection */
  double tail_threshold;  /* <= 0 selects 1e-7 */
} nft_direct_options;

void nft_direct_options_init(nft_direct_options *opt);

nft_status nft_direct(const nft_potential *p, const nft_direct_options *opt,
                      nft_scattering **out);

/* ------------------------------------------------------------------ */
/* scattering data                                                     */

nft_status nft_scattering_evolve(const nft_scattering *sd, double dt,
                                 nft_scattering **out);

size_t nft_scattering_sample_count(const nft_scattering *sd);
size_t nft_scattering_eigenvalue_count(const nft_scattering *sd);
double nft_scattering_time(const nft_scattering *sd);
double nft_scattering_unitarity_defect(const nft_scattering *sd);

/* Caller provides arrays of sample_count; any pointer may be NULL. */
nft_status nft_scattering_samples(const nft_scattering *sd, double *rho, double *a_re,
                                  double *a_im, double *b_re, double *b_im);

nft_status nft_scattering_eigenvalue(const nft_scattering *sd, size_t m, double *rho_re,
                                     double *rho_im, double *c_re, double *c_im);

nft_status nft_scattering_save(const nft_scattering *sd, const char *path);
nft_status nft_scattering_load(const char *path, nft_scattering **out);
void nft_scattering_free(nft_scattering *sd);

/* ------------------------------------------------------------------ */
/* inverse transform                                                   */

typedef struct nft_inverse_options {
  int order;             /* <= 0 selects 50 */
  int sample_limit;      /* 0: use every stored sample */
  double x_min, x_max;   /* x_min >= x_max: the data's own domain */
  double x_step;         /* <= 0 selects 0.01 */
  double regularization; /* ridge; < 0 treated as 0 */
  int refine_steps;      /* < 0 selects 1 */
} nft_inverse_options;

void nft_inverse_options_init(nft_inverse_options *opt);

nft_status nft_invert(const nft_scattering *sd, const nft_inverse_options *opt,
                      nft_solution **out);

size_t nft_solution_point_count(const nft_solution *s);

/* Caller provides arrays of point_count; any pointer may be NULL. */
nft_status nft_solution_values(const nft_solution *s, double *x, double *q_re,
                               double *q_im);

/* Per-point relative least-squares residuals. */
nft_status nft_solution_residuals(const nft_solution *s, double *per_x);

double nft_solution_wronskian_spread(const nft_solution *s);
double nft_solution_time(const nft_solution *s);

/* CSV columns: x, Re q, Im q, |q|. */
nft_status nft_solution_save_csv(const nft_solution *s, const char *path);
void nft_solution_free(nft_solution *s);

/* ------------------------------------------------------------------ */
/* built-in benchmark validation                                       */

/* Runs benchmark example 1..4 at reference settings and returns a JSON
 * report (caller frees with nft_string_free). quick != 0 selects reduced
 * settings for smoke testing; the reference bounds then do not apply. */
nft_status nft_validate_example(int example_id, int quick, char **report_json);

#ifdef __cplusplus
}
#endif

#endif /* NFT_H */
