/*
 * horadyn C API.
 *
 * Exact quantities cross this boundary as decimal strings: inputs accept
 * "7", "-3/4", "0.125" or "1.5e-3"; outputs are canonical "num/den" (or
 * "num" for integers). Every function that can fail returns an hd_status;
 * the message for the most recent failure on the calling thread is available
 * from hd_last_error(). Handles returned through `out` parameters are owned
 * by the caller and released with the matching *_destroy function. Strings
 * returned from accessors stay valid until their handle is destroyed.
 */
#ifndef HORADYN_H
#define HORADYN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HORADYN_BUILDING)
#define HD_API __attribute__((visibility("default")))
#else
#define HD_API
#endif

typedef enum hd_status {
  HD_OK = 0,
  HD_ERR_INVALID_ARGUMENT = 1,
  HD_ERR_NON_REAL_ROOTS = 2,
  HD_ERR_SPEC_NOT_CANONICAL = 3,
  HD_ERR_INDEX_CONSTRAINT = 4,
  HD_ERR_ZERO_DENOMINATOR = 5,
  HD_ERR_FORBIDDEN_INITIAL = 6,
  HD_ERR_INITIAL_AT_MINUS_PHI_PLUS = 7,
  HD_ERR_SINGULARITY = 8,
  HD_ERR_NEAR_SINGULARITY = 9,
  HD_ERR_WRONG_BRANCH = 10,
  HD_ERR_NOT_EQUILIBRIUM = 11,
  HD_ERR_ORBIT_TOO_SHORT = 12,
  HD_ERR_OUT_OF_MEMORY = 13,
  HD_ERR_INTERNAL = 14
} hd_status;

typedef enum hd_branch { HD_BRANCH_PLUS = 0, HD_BRANCH_MINUS = 1 } hd_branch;

typedef enum hd_plane { HD_PLANE_EXACT = 0, HD_PLANE_FLOAT = 1 } hd_plane;

typedef enum hd_orbit_status {
  HD_ORBIT_COMPLETED = 0,
  HD_ORBIT_SINGULARITY = 1,
  HD_ORBIT_NEAR_SINGULAR = 2
} hd_orbit_status;

typedef enum hd_identity {
  HD_IDENTITY_CONVOLUTION = 0,
  HD_IDENTITY_CASSINI = 1,
  HD_IDENTITY_DOCAGNE = 2,
  HD_IDENTITY_JOHNSON = 3,
  HD_IDENTITY_PHI_POWER = 4
} hd_identity;

typedef enum hd_product_theorem {
  HD_PRODUCT_RECONSTRUCT = 0, /* (k, n): W_n from the orbit of q W_k / W_{k+1} */
  HD_PRODUCT_DOCAGNE = 1,     /* (n, r): (-1)^n x_1..x_n = W_{n+r} / W_r */
  HD_PRODUCT_JOHNSON = 2      /* (r, n): (-1)^{r+1} q^{r-n} x_1..x_n = W_r / W_{n-r} */
} hd_product_theorem;

typedef enum hd_stability {
  HD_STABLE = 0, /* locally asymptotically stable */
  HD_MARGINAL = 1,
  HD_UNSTABLE = 2
} hd_stability;

typedef enum hd_bracket {
  HD_BRACKET_IN_UNIT = 0,
  HD_BRACKET_AT_ONE = 1,
  HD_BRACKET_BEYOND_ONE = 2,
  HD_BRACKET_IN_MINUS_UNIT = 3,
  HD_BRACKET_AT_MINUS_ONE = 4,
  HD_BRACKET_BELOW_MINUS_ONE = 5
} hd_bracket;

typedef struct hd_equation hd_equation;
typedef struct hd_series hd_series;
typedef struct hd_products hd_products;
typedef struct hd_identity_report hd_identity_report;

typedef struct hd_roots {
  double phi_plus;
  double phi_minus;
  double discriminant;
  double A;
  double B;
} hd_roots;

typedef struct hd_equilibrium {
  double value;
  double multiplier;
  hd_stability classification;
  hd_bracket bracket;
} hd_equilibrium;

typedef struct hd_cycle {
  double phi;
  double psi;
  double residual;
  double approx_phi;
  double approx_psi;
} hd_cycle;

/* ---- diagnostics -------------------------------------------------------- */

HD_API const char* hd_version(void);
HD_API const char* hd_status_name(hd_status status);
/* Message of the last failure on this thread ("" if none). */
HD_API const char* hd_last_error(void);
/* Step carried by the last ForbiddenInitial/Singularity failure, else -1. */
HD_API long hd_last_error_step(void);

/* ---- equations ---------------------------------------------------------- */

HD_API hd_status hd_equation_create(hd_branch branch, const char* p, const char* q, int nu, hd_equation** out);
HD_API void hd_equation_destroy(hd_equation* eq);

/* ---- series (orbits, sequences, partial products) ----------------------- */

HD_API size_t hd_series_length(const hd_series* s);
HD_API long hd_series_index(const hd_series* s, size_t i);
HD_API double hd_series_value(const hd_series* s, size_t i);
/* Exact value as a string, or NULL when the series is floating. */
HD_API const char* hd_series_exact(const hd_series* s, size_t i);
HD_API int hd_series_is_exact(const hd_series* s);
/* Orbit outcome; *step receives the failing index (or -1). */
HD_API hd_orbit_status hd_series_status(const hd_series* s, long* step);
HD_API void hd_series_destroy(hd_series* s);

/* ---- Horadam sequences -------------------------------------------------- */

HD_API hd_status hd_horadam_series(const char* a, const char* b, const char* p, const char* q, long from, long to,
                                   hd_series** out);
HD_API hd_status hd_binet_roots(double p, double q, double a, double b, hd_roots* out);
/* *is_zero = 1 when LHS - RHS is exactly zero. */
HD_API hd_status hd_check_identity(hd_identity kind, const char* p, const char* q, const long* indices,
                                   size_t count, int* is_zero);
HD_API hd_status hd_identity_suite(const char* p, const char* q, long nmax, hd_identity_report** out);
HD_API size_t hd_identity_report_count(const hd_identity_report* r);
HD_API const char* hd_identity_report_kind(const hd_identity_report* r, size_t i);
HD_API long hd_identity_report_checked(const hd_identity_report* r, size_t i);
HD_API long hd_identity_report_failed(const hd_identity_report* r, size_t i);
HD_API int hd_identity_report_all_zero(const hd_identity_report* r);
HD_API void hd_identity_report_destroy(hd_identity_report* r);

/* ---- closed forms (nu = 1) ---------------------------------------------- */

/* x_0 .. x_n, exact. */
HD_API hd_status hd_closed_form(const hd_equation* eq, const char* x0, long n, hd_series** out);
/* Forbidden initial values of depth 1 .. depth; index = depth. */
HD_API hd_status hd_forbidden(const hd_equation* eq, long depth, hd_series** out);
HD_API hd_status hd_asymptotic_limit(const hd_equation* eq, double* out);
/* One-element exact series holding the theorem's value. */
HD_API hd_status hd_product_value(hd_product_theorem kind, const char* p, const char* q, long i, long j,
                                    hd_series** out);

HD_API hd_status hd_products_create(const hd_equation* eq, const char* x0, long steps, hd_products** out);
/* "p>q-1", "p=q-1" or "p<q-1". */
HD_API const char* hd_products_regime(const hd_products* r);
/* Each returns 1 and writes *value when the quantity exists, else 0. */
HD_API int hd_products_limit(const hd_products* r, double* value);
HD_API int hd_products_even_limit(const hd_products* r, double* value);
HD_API int hd_products_odd_limit(const hd_products* r, double* value);
HD_API int hd_products_alternating(const hd_products* r);
HD_API int hd_products_divergence_certified(const hd_products* r);
/* Borrowed; lives as long as the report. */
HD_API const hd_series* hd_products_partials(const hd_products* r);
HD_API void hd_products_destroy(hd_products* r);

/* ---- dynamics ----------------------------------------------------------- */

HD_API hd_status hd_simulate(const hd_equation* eq, const char* x0, long steps, hd_plane plane, hd_series** out);
/* Plus: the positive-orbit envelope; Minus: the negative-orbit envelope. */
HD_API hd_status hd_bounds_envelope(const hd_equation* eq, double* lo, double* hi);
/* *found = 0 when no period <= max_period fits. */
HD_API hd_status hd_detect_period(const hd_series* orbit, long max_period, double tol, long burn_in, long* period,
                                  long* phase, int* found);

/* ---- analysis ----------------------------------------------------------- */

/* Writes up to `cap` reports; *count receives the number of equilibria. */
HD_API hd_status hd_equilibria(const hd_equation* eq, hd_equilibrium* out, size_t cap, size_t* count);
HD_API const char* hd_stability_name(hd_stability s);
HD_API const char* hd_bracket_name(hd_bracket b);
HD_API hd_status hd_period_two(const hd_equation* eq, double tol, hd_cycle* out, int* found);
HD_API hd_status hd_minus_even_threshold(const char* p, const char* q, int cap, int* nu, int* found);

#ifdef __cplusplus
}
#endif

#endif /* HORADYN_H */
