/* fibspec — spectra of tridiagonal Fibonacci Hamiltonians.
 *
 * C API of the shared library. All functions return a status code and
 * write results through out-parameters; fibspec_last_error() describes the
 * most recent failure on the calling thread. Interval sets are opaque
 * handles released with fibspec_intervals_free().
 */
#ifndef FIBSPEC_FIBSPEC_H
#define FIBSPEC_FIBSPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fibspec_status {
  FIBSPEC_OK = 0,
  FIBSPEC_ERR_INVALID_ARGUMENT = 1,
  FIBSPEC_ERR_NUMERICAL = 2,
  FIBSPEC_ERR_BUFFER_TOO_SMALL = 3
} fibspec_status;

const char* fibspec_version(void);
/* thread-local message for the most recent error */
const char* fibspec_last_error(void);

/* ---- substitution combinatorics ---- */

fibspec_status fibspec_fibonacci(int k, long long* out);
/* word S^{k-1}(a); writes its length to *len. Call with buf = NULL to size. */
fibspec_status fibspec_fib_word(int k, char* buf, size_t cap, size_t* len);

/* ---- trace map ---- */

fibspec_status fibspec_trace_step(const double in[3], double out[3]);
fibspec_status fibspec_trace_inverse_step(const double in[3], double out[3]);
fibspec_status fibspec_trace_invariant(const double in[3], double* out);
fibspec_status fibspec_gamma(double lambda, double p, double q, double out[3]);
fibspec_status fibspec_invariant_on_line(double lambda, double p, double q, double* out);
/* *exists = 0 when the invariant is lambda-independent */
fibspec_status fibspec_critical_energy(double p, double q, double* out, int* exists);
fibspec_status fibspec_per2_point(double x, double out[3]);
fibspec_status fibspec_torus_factor(double theta, double phi, double out[3]);
/* bound_c <= 0 selects the default max(1, |(1+p^2)/2p|) + 1 */
fibspec_status fibspec_escape_time(double lambda, double p, double q, double bound_c,
                                   int maxiter, int* escaped, int* escape_index,
                                   double final_triple[3], double* max_abs);
/* grid points of the invariant surface I = v; xyz holds triples */
fibspec_status fibspec_surface_mesh(double v, double lo, double hi, int n, double* xyz,
                                    size_t cap_triples, size_t* count);

/* ---- half-traces ---- */

/* x_k by iterating the trace map; *saturated flags clamping at 1e150 */
fibspec_status fibspec_trace_eval(int k, double lambda, double p, double q, double* out,
                                  int* saturated);
/* signed half-trace of the cocycle over a word of letters 'a'/'b' */
fibspec_status fibspec_half_trace(const char* word, double lambda, double p, double q,
                                  double* out);
/* half-trace over the level-k cell family the trace map follows */
fibspec_status fibspec_half_trace_trace_cell(int k, double lambda, double p, double q,
                                             double* out);

/* ---- interval sets ---- */

typedef struct fibspec_intervals fibspec_intervals;
void fibspec_intervals_free(fibspec_intervals* s);
size_t fibspec_intervals_size(const fibspec_intervals* s);
fibspec_status fibspec_intervals_get(const fibspec_intervals* s, size_t i, double* left,
                                     double* right);
double fibspec_intervals_measure(const fibspec_intervals* s);

/* ---- spectra ---- */

fibspec_status fibspec_search_bounds(double p, double q, double* lo, double* hi);
/* tol <= 0 selects the default 1e-10 */
fibspec_status fibspec_bands(int k, double p, double q, double tol, fibspec_intervals** out,
                             int* band_count);
fibspec_status fibspec_trace_bounded_set(int k, double p, double q, double bound_c,
                                         double tol, fibspec_intervals** out);
fibspec_status fibspec_approx_spectrum(int k, double p, double q, double bound_c, double tol,
                                       fibspec_intervals** out);
fibspec_status fibspec_escape_spectrum(double p, double q, int depth, double resolution,
                                       double bound_c, fibspec_intervals** out);
/* eigenvalue oracle; use_trace_cell = 1 diagonalizes the trace-map cell,
 * 0 the fib_word(k) cell */
fibspec_status fibspec_oracle_bands(int k, double p, double q, int use_trace_cell,
                                    fibspec_intervals** out);
/* rows of (k, band_count, measure of approx_spectrum(k)) */
fibspec_status fibspec_measure_scan(int kmin, int kmax, double p, double q, double bound_c,
                                    double tol, double* rows, size_t cap_rows, size_t* n);

/* ---- fractal dimensions ---- */

typedef struct fibspec_dimension {
  double value;
  double std_error;
  double r_squared;
  double eps_min;
  double eps_max;
  int n_points;
  int converged;
} fibspec_dimension;

fibspec_status fibspec_box_count(const fibspec_intervals* s, double eps, long long* out);
fibspec_status fibspec_box_dimension(const fibspec_intervals* s, double eps_min,
                                     double eps_max, int n_scales, fibspec_dimension* out);
/* global estimate for the level-k cover with default scales */
fibspec_status fibspec_spectrum_dimension(double p, double q, int k, int n_scales,
                                          fibspec_dimension* out);
fibspec_status fibspec_local_dimension(double p, double q, int k, double window_left,
                                       double window_right, int n_scales,
                                       fibspec_dimension* out);
/* centers[cap], est[cap]; *n windows written */
fibspec_status fibspec_dimension_profile(double p, double q, int k, int n_windows,
                                         int n_scales, double* centers,
                                         fibspec_dimension* est, size_t cap, size_t* n);

/* ---- density of states ---- */

fibspec_status fibspec_ids_value(int k, double p, double q, double lambda, double* out);
fibspec_status fibspec_dos_weight(int k, double p, double q, double a, double b,
                                  double* out);
/* per elementary band: rows of (left, right, ids_left, ids_right) */
fibspec_status fibspec_ids_bands(int k, double p, double q, double* rows, size_t cap_rows,
                                 size_t* n);
/* eps_min/eps_max <= 0 select defaults */
fibspec_status fibspec_pointwise_dimension(double p, double q, int k, double energy,
                                           double eps_min, double eps_max, int n_scales,
                                           fibspec_dimension* out);
/* rows of (energy, d, local_dim, gap, converged) */
fibspec_status fibspec_dos_report(double p, double q, int k, int n_points,
                                  unsigned long long seed, double* rows, size_t cap_rows,
                                  size_t* n);

#ifdef __cplusplus
}
#endif

#endif /* FIBSPEC_FIBSPEC_H */
