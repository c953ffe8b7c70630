#ifndef NAZETA_CAPI_H
#define NAZETA_CAPI_H

/* C interface over the zeta library: every entry point is a one-shot call
 * that takes plain inputs, runs the computation, and hands back a malloc'd
 * JSON (or CSV) string through an out-parameter.  Status codes mirror the
 * process exit codes of the command-line tool.  Strings returned through
 * out-parameters are released with nz_string_free.  On any nonzero status
 * the out-parameter is left untouched and nz_last_error() carries the
 * diagnostic for the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nz_status {
    NZ_OK = 0,
    NZ_INPUT_ERROR = 1,   /* malformed input, domain violation */
    NZ_MATH_ERROR = 2,    /* a mathematical consistency check failed */
    NZ_NUMERIC_ERROR = 3, /* refinement or summation did not converge */
} nz_status;

const char* nz_version(void);

/* Diagnostic for the most recent failing call on this thread. */
const char* nz_last_error(void);

void nz_string_free(char* s);

/* Point counts N_m for m = d_lo .. d_hi by enumeration.  budget caps the
 * total enumeration work (sum of q^m); 0 means the default cap. */
nz_status nz_count_json(const char* curve_json, unsigned d_lo, unsigned d_hi,
                        unsigned long long budget, char** out_json);

/* Point-count zeta data of the curve: numerator, class number, N_1. */
nz_status nz_artin_json(const char* curve_json, char** out_json);

/* Invariant table (alpha, beta, gamma) of the rank-r zeta; rank 1 or 2. */
nz_status nz_invariants_json(const char* curve_json, unsigned rank,
                             char** out_json);

/* Full rank-2 genus-2 pipeline: masses, gamma values, numerator, roots. */
nz_status nz_zeta2g2_json(const char* curve_json, char** out_json);

/* Built-in consistency report for the rank-2 genus-2 pipeline.
 * as_csv nonzero emits CSV, zero emits JSON.  A failing row does not make
 * the call fail; the report itself carries the verdicts. */
nz_status nz_zeta2g2_report(const char* curve_json, int as_csv,
                            char** out_text);

/* Store key for one (curve, rank) pair as a 16-digit hex string (not JSON);
 * the same key the Euler store header carries.  Useful for naming cache
 * files before the first computation. */
nz_status nz_euler_fingerprint(const char* curve_json, unsigned rank,
                               char** out_hex);

/* Truncated Euler product over good primes p <= xmax at s (e.g. "5.5+0i"),
 * keeping local factors in the JSON-lines store at store_path (created or
 * extended as needed; the store is keyed to the curve and rank).  force
 * nonzero evaluates below the convergence abscissa. */
nz_status nz_euler_json(const char* curve_json, unsigned rank,
                        unsigned long long xmax, const char* s_str,
                        const char* store_path, unsigned threads, int force,
                        char** out_json);

/* Reciprocal roots of the rank-r numerator with pairing diagnostics. */
nz_status nz_roots_json(const char* curve_json, unsigned rank,
                        char** out_json);

/* Rank-2 lattice zeta at s (string like "1.3+0i") by quadrature over the
 * semistable moduli domain.  max_cells 0 and threads 0 mean defaults. */
nz_status nz_lattice_xi_json(const char* s_str, double tol, size_t max_cells,
                             unsigned threads, char** out_json);

/* Samples of xi(1/2 + it) for t = t_min, t_min + step, ..., <= t_max, with
 * sign-change brackets of the real part. */
nz_status nz_lattice_scan_json(double t_min, double t_max, double step,
                               double tol, size_t max_cells, unsigned threads,
                               char** out_json);

/* Effective h^0 of the unit-covolume lattice at tau = x + iy. */
nz_status nz_lattice_h0_json(double x, double y, double tail_tol,
                             char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* NAZETA_CAPI_H */
