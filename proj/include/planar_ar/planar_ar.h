/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * C interface of the planar-ar library: the stationary solution of the
 * first-order autoregressive recurrence on the plane lattice,
 *
 *   X[i][j] = a X[i-1][j] + b X[i][j-1] + c X[i-1][j-1] + eps[i][j],
 *
 * covering existence/causality checks, exact and quadrature-verified
 * autocovariances, MA(inf) coefficients, seeded field simulation, and
 * moment-based parameter recovery.
 *
 * All functions return PAR_OK (0) on success; par_last_error_message() gives
 * a textual description of the most recent failure on the calling thread.
 * Objects returned through out-pointers are owned by the caller and released
 * with the matching *_free function; strings with par_string_free.
 */
#ifndef PLANAR_AR_H
#define PLANAR_AR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum par_status {
  PAR_OK = 0,
  PAR_EINVAL = 1,         /* malformed call */
  PAR_EDOMAIN = 2,        /* argument outside the mathematical domain */
  PAR_ENONSTATIONARY = 3, /* D <= 0 */
  PAR_ENONCAUSAL = 4,     /* operation requires f1..f4 > 0 */
  PAR_ERANGE = 5,         /* lag or index outside a window */
  PAR_EILLCOND = 6,
  PAR_EINCONSISTENT = 7,  /* values not realizable by a stationary model */
  PAR_ENOCONV = 8,
  PAR_EPARSE = 9,
  PAR_EINTERNAL = 10
} par_status;

const char* par_status_name(par_status s);
const char* par_last_error_message(void);
const char* par_version(void);

/* Shortest round-trip decimal formatting used by all library CSV output.
 * Writes at most 40 bytes including the terminator. */
par_status par_format_double(double value, char* buf, size_t buf_size);

void par_string_free(char* s);

/* ---------- parameter sets and conditions ---------- */

typedef struct par_model par_model;

typedef enum par_symmetry {
  PAR_SYM_GENERIC = 0,
  PAR_SYM_SYMMETRIC_ABC = 1,        /* c = -a*b */
  PAR_SYM_TRANSECT_UNCORRELATED = 2,/* a = -b*c */
  PAR_SYM_DEGENERATE = 3            /* a = b = c = 0 */
} par_symmetry;

typedef struct par_condition_report {
  double f1, f2, f3, f4; /* 1-a-b-c, 1-a+b+c, 1+a-b+c, 1+a+b-c */
  double d;              /* f1*f2*f3*f4; stationary iff d > 0 */
  int stationary;
  int causal;
  int pnd_sufficient;    /* stationary and 1+c^2 > a^2+b^2 */
  int near_boundary;     /* min |f_i| < 1e-9 */
  par_symmetry symmetry;
} par_condition_report;

par_status par_model_create(double a, double b, double c, double sigma2,
                            par_model** out);
void par_model_free(par_model* m);
par_status par_model_params(const par_model* m, double* a, double* b, double* c,
                            double* sigma2);
par_status par_model_check(const par_model* m, par_condition_report* out);

/* Transform id 1..4; each is self-inverse. 2 needs c != 0, 3 a != 0, 4 b != 0. */
par_status par_model_transform(const par_model* m, int transform, par_model** out);

typedef struct par_equiv_class {
  int class_size;           /* 1, 2 or 4 */
  int transform_id[4];
  double params[4][4];      /* a, b, c, sigma2 per member */
  int causal_member_index;  /* -1 when no member is causal */
} par_equiv_class;

par_status par_model_equivalence(const par_model* m, par_equiv_class* out);

/* JSON renderings of the condition report and the equivalence class. */
par_status par_model_check_json(const par_model* m, char** out);
par_status par_model_equivalence_json(const par_model* m, char** out);

typedef enum par_flip {
  PAR_FLIP_NONE = 0,
  PAR_FLIP_BOTH_AXES = 1,
  PAR_FLIP_FIRST_AXIS = 2,
  PAR_FLIP_SECOND_AXIS = 3
} par_flip;

/* Unique causal member of the transform orbit of a stationary model;
 * gamma_model(h1,h2) = gamma_canonical(s1*h1, s2*h2) per the flip kind. */
par_status par_model_canonical(const par_model* m, par_model** canonical,
                               int* transform, par_flip* flip);

typedef enum par_product_structure {
  PAR_PROD_FULLY_MULTIPLICATIVE = 0,
  PAR_PROD_OPPOSITE_QUADRANT = 1,
  PAR_PROD_SAME_QUADRANT = 2,
  PAR_PROD_BOUNDARY_UNCLASSIFIED = 3
} par_product_structure;

par_status par_model_product_structure(const par_model* m, par_product_structure* out);

/* ---------- spectral density and quadrature ---------- */

typedef enum par_quad_rule { PAR_QUAD_TRAPEZOID = 0, PAR_QUAD_GAUSS_LEGENDRE = 1 } par_quad_rule;

par_status par_density_at(const par_model* m, double nu1, double nu2, double* out);

par_status par_acf_quadrature(const par_model* m, long h1, long h2, int nodes_per_axis,
                              par_quad_rule rule, double* out);

/* ---------- autocovariance grids ---------- */

typedef struct par_acf_grid par_acf_grid;

par_status par_acf_value(const par_model* m, long h1, long h2, double* out);
par_status par_acf_grid_compute(const par_model* m, long h1_min, long h1_max,
                                long h2_min, long h2_max, par_acf_grid** out);
/* Same window evaluated with the quadrature oracle (one density build). */
par_status par_acf_grid_quadrature(const par_model* m, long h1_min, long h1_max,
                                   long h2_min, long h2_max, int nodes_per_axis,
                                   par_quad_rule rule, par_acf_grid** out);
par_status par_acf_grid_create(long h1_min, long h1_max, long h2_min, long h2_max,
                               par_acf_grid** out);
par_status par_acf_grid_set(par_acf_grid* g, long h1, long h2, double value);
par_status par_acf_grid_bounds(const par_acf_grid* g, long* h1_min, long* h1_max,
                               long* h2_min, long* h2_max);
par_status par_acf_grid_get(const par_acf_grid* g, long h1, long h2, double* out);
par_status par_acf_grid_to_csv(const par_acf_grid* g, char** out);
par_status par_acf_grid_to_json(const par_acf_grid* g, char** out);
par_status par_acf_grid_from_csv(const char* text, par_acf_grid** out);
void par_acf_grid_free(par_acf_grid* g);

/* ---------- MA(inf) coefficients ---------- */

typedef struct par_psi_table par_psi_table;

par_status par_psi(const par_model* m, long k, long l, double* out);
par_status par_psi_table_compute(const par_model* m, long kmax, long lmax,
                                 par_psi_table** out);
par_status par_psi_table_dims(const par_psi_table* t, long* kmax, long* lmax);
par_status par_psi_table_get(const par_psi_table* t, long k, long l, double* out);
par_status par_psi_table_tail_bound(const par_psi_table* t, double* out);
par_status par_psi_table_to_csv(const par_psi_table* t, char** out);
par_status par_psi_table_to_json(const par_psi_table* t, char** out);
void par_psi_table_free(par_psi_table* t);

par_status par_cross_covariance(const par_model* m, long h1, long h2, double* out);

/* ---------- field simulation ---------- */

typedef struct par_field par_field;

typedef enum par_sim_method {
  PAR_SIM_BOUNDARY_RECURSION = 0,
  PAR_SIM_CAUSAL_MA = 1
} par_sim_method;

typedef enum par_noise { PAR_NOISE_GAUSSIAN = 0, PAR_NOISE_UNIFORM = 1 } par_noise;

/* Deterministic for fixed (seed, method, noise, tol) regardless of the
 * PLANAR_AR_THREADS setting. Pass tol <= 0 for the default 1e-8. */
par_status par_simulate(const par_model* m, long n_rows, long n_cols, uint64_t seed,
                        par_sim_method method, par_noise noise, double tol,
                        par_field** out);
par_status par_field_dims(const par_field* f, long* n_rows, long* n_cols);
par_status par_field_get(const par_field* f, long i, long j, double* out);
par_status par_field_to_csv(const par_field* f, char** out);
par_status par_field_to_json(const par_field* f, char** out);
par_status par_field_to_pgm(const par_field* f, char** out);
par_status par_field_from_csv(const char* text, par_field** out);
void par_field_free(par_field* f);

/* Biased sample autocovariance over [-h1_max..h1_max] x [-h2_max..h2_max]. */
par_status par_empirical_acf(const par_field* f, long h1_max, long h2_max,
                             par_acf_grid** out);

/* ---------- moment-based parameter recovery ---------- */

typedef struct par_estimate par_estimate;

par_status par_recover_params(double g00, double g10, double g01, double g11,
                              par_estimate** out);
/* empirical != 0 marks the grid as a sample ACF and attaches Yule-Walker
 * residual diagnostics at lags |h| <= 2. */
par_status par_recover_from_grid(const par_acf_grid* g, int empirical,
                                 par_estimate** out);
par_status par_estimate_params(const par_estimate* e, double* a, double* b, double* c,
                               double* sigma2);
par_status par_estimate_to_json(const par_estimate* e, char** out);
void par_estimate_free(par_estimate* e);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PLANAR_AR_H */
