/*
 * Copyright 2026 The qsi developers.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the qsi shared library: quantum variance, metric-adjusted
 * skew information, the lattice of representing functions for monotone
 * quantum Fisher metrics, and randomized verification suites for the
 * inequalities connecting them.
 *
 * All objects are opaque handles created and released through this API.
 * Every fallible call returns a qsi_status; QSI_OK is zero. On failure the
 * thread-local message from qsi_last_error_message() carries the detail.
 * Strings returned through char** are owned by the caller and must be
 * released with qsi_string_free().
 */

#ifndef QSI_QSI_H
#define QSI_QSI_H

#include <stdint.h>

#ifndef QSI_API
#if defined(_WIN32)
#define QSI_API
#else
#define QSI_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsi_status {
  QSI_OK = 0,
  QSI_ERR_INVALID_ARGUMENT = 1,
  QSI_ERR_PARSE = 2,
  QSI_ERR_NOT_HERMITIAN = 3,
  QSI_ERR_NOT_POSITIVE_DEFINITE = 4,
  QSI_ERR_TRACE_NOT_ONE = 5,
  QSI_ERR_CONVERGENCE = 6,
  QSI_ERR_DIMENSION_MISMATCH = 7,
  QSI_ERR_DOMAIN = 8,
  QSI_ERR_NOT_REGULAR = 9,
  QSI_ERR_QUADRATURE = 10,
  QSI_ERR_INTEGRABILITY = 11,
  QSI_ERR_UNSUPPORTED_CONTINUATION = 12,
  QSI_ERR_BRANCH_TRACKING = 13,
  QSI_ERR_WEIGHT_UNAVAILABLE = 14,
  QSI_ERR_METHOD_DISAGREEMENT = 15,
  QSI_ERR_NUMERICAL_INCONSISTENCY = 16,
  QSI_ERR_IO = 17,
  QSI_ERR_INTERNAL = 18
} qsi_status;

typedef struct qsi_function qsi_function; /* normalized symmetric function on (0,inf) */
typedef struct qsi_weight qsi_weight;     /* measurable weight h : (0,1) -> [0,1] */
typedef struct qsi_matrix qsi_matrix;     /* square complex matrix (observable) */
typedef struct qsi_density qsi_density;   /* positive definite unit-trace state */

QSI_API const char* qsi_status_name(qsi_status status);
QSI_API const char* qsi_last_error_message(void);
QSI_API void qsi_string_free(char* s);

/* ---------------------------------------------------------------------- */
/* Representing functions. Spec grammar: min | max | sqrt | wyd:<p> |      */
/* bridge:<p> with p in (0,1) for wyd and [0,1) for bridge.                */
/* ---------------------------------------------------------------------- */

QSI_API qsi_status qsi_function_parse(const char* spec, qsi_function** out);
QSI_API void qsi_function_free(qsi_function* fn);
QSI_API qsi_status qsi_function_spec(const qsi_function* fn, char** out);

QSI_API qsi_status qsi_function_eval(const qsi_function* fn, double t, double* out);
QSI_API qsi_status qsi_function_f_zero(const qsi_function* fn, double* out);
QSI_API qsi_status qsi_function_is_regular(const qsi_function* fn, int* out);

/* f(0)/f(t) and the companion transform (t+1)/2 - (t-1)^2 f(0)/(2 f(t));
 * both require a regular function. */
QSI_API qsi_status qsi_function_eval_check(const qsi_function* fn, double t, double* out);
QSI_API qsi_status qsi_function_eval_tilde(const qsi_function* fn, double t, double* out);

/* Morozova-Chentsov kernel 1/(y f(x/y)), its regularized form
 * f(0)/(y f(x/y)), and (x+y)/f(0) - (x-y)^2/(y f(x/y)). */
QSI_API qsi_status qsi_function_mc(const qsi_function* fn, double x, double y, double* out);
QSI_API qsi_status qsi_function_check_c(const qsi_function* fn, double x, double y, double* out);
QSI_API qsi_status qsi_function_d_c(const qsi_function* fn, double x, double y, double* out);

/* Weight access: the stored closed form when one exists, otherwise the
 * boundary-value extraction. qsi_function_extract_weight always takes the
 * extraction route. */
QSI_API qsi_status qsi_function_has_closed_weight(const qsi_function* fn, int* out);
QSI_API qsi_status qsi_function_weight(const qsi_function* fn, double lambda, double* out);
QSI_API qsi_status qsi_function_extract_weight(const qsi_function* fn, double lambda,
                                               double* out);

/* Lattice structure and the involution t -> t/f(t). */
QSI_API qsi_status qsi_function_sharp(const qsi_function* fn, qsi_function** out);
QSI_API qsi_status qsi_function_meet(const qsi_function* a, const qsi_function* b,
                                     qsi_function** out);
QSI_API qsi_status qsi_function_join(const qsi_function* a, const qsi_function* b,
                                     qsi_function** out);

typedef enum qsi_order_method {
  QSI_ORDER_AUTO = 0,
  QSI_ORDER_WEIGHT = 1,
  QSI_ORDER_PHI = 2,
  QSI_ORDER_BOTH = 3
} qsi_order_method;

typedef struct qsi_order_verdict {
  int holds;
  qsi_order_method method_used;
  double worst_margin;
  int grid_size;
} qsi_order_verdict;

QSI_API qsi_status qsi_order_preceq(const qsi_function* f, const qsi_function* g,
                                    qsi_order_method method, qsi_order_verdict* out);

/* ---------------------------------------------------------------------- */
/* Weight functions. Spec grammar: const:<v> | wydh:<p> | steph:<p> |      */
/* grid:<file.csv> (two columns, required header "lambda,value").          */
/* ---------------------------------------------------------------------- */

QSI_API qsi_status qsi_weight_parse(const char* spec, qsi_weight** out);
QSI_API void qsi_weight_free(qsi_weight* w);
QSI_API qsi_status qsi_weight_eval(const qsi_weight* w, double lambda, double* out);

/* Reconstruction of f and of f(0)/f from a weight via adaptive quadrature
 * of the canonical exponential representations. */
QSI_API qsi_status qsi_weight_reconstruct_f(const qsi_weight* w, double t, double* out);
QSI_API qsi_status qsi_weight_reconstruct_check_f(const qsi_weight* w, double t, double* out);

/* Closed-form weights without constructing handles. */
QSI_API qsi_status qsi_wyd_weight(double p, double lambda, double* out);
QSI_API qsi_status qsi_bridge_weight(double p, double lambda, double* out);

/* ---------------------------------------------------------------------- */
/* States, observables, and the information quantities.                    */
/* Entries are row-major (re, im) pairs: 2*dim*dim doubles.                */
/* ---------------------------------------------------------------------- */

QSI_API qsi_status qsi_matrix_create(int dim, const double* entries, qsi_matrix** out);
QSI_API void qsi_matrix_free(qsi_matrix* m);

/* Validates Hermiticity, unit trace, and strict positivity, then caches the
 * spectral decomposition. */
QSI_API qsi_status qsi_density_create(int dim, const double* entries, qsi_density** out);
QSI_API void qsi_density_free(qsi_density* rho);

QSI_API qsi_status qsi_variance(const qsi_density* rho, const qsi_matrix* a, double* out);
QSI_API qsi_status qsi_covariance(const qsi_density* rho, const qsi_matrix* a,
                                  const qsi_matrix* b, double* out_re, double* out_im);
QSI_API qsi_status qsi_skew_info(const qsi_function* fn, const qsi_density* rho,
                                 const qsi_matrix* a, double* out);
QSI_API qsi_status qsi_skew_info_alt(const qsi_function* fn, const qsi_density* rho,
                                     const qsi_matrix* a, double* out);
QSI_API qsi_status qsi_skew_bilinear(const qsi_function* fn, const qsi_density* rho,
                                     const qsi_matrix* a, const qsi_matrix* b, double* out_re,
                                     double* out_im);
QSI_API qsi_status qsi_wyd_direct(double p, const qsi_density* rho, const qsi_matrix* a,
                                  double* out);

/* ---------------------------------------------------------------------- */
/* Randomized verification suites.                                         */
/* ---------------------------------------------------------------------- */

typedef struct qsi_verify_config {
  const char* suite;         /* basic | matrix | det | pmono | convexity */
  const char* function_spec; /* ignored by pmono */
  int dim;
  int tuple_size;
  int trials;
  uint64_t seed;
  double tol;
} qsi_verify_config;

/* Fills in the defaults: suite "basic", function "wyd:0.5", dim 3,
 * tuple_size 2, trials 1000, seed 42, tol 1e-9. */
QSI_API void qsi_verify_config_init(qsi_verify_config* cfg);

/* Runs one suite. report_json receives the serialized report
 * {suite, function_spec, dims, trials, seed, worst_margin, violations,
 * passed}; passed receives 1 when no margin fell below -tol. */
QSI_API qsi_status qsi_verify_run(const qsi_verify_config* cfg, char** report_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QSI_QSI_H */
