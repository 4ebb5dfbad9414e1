/*
 * Copyright 2026 The ptheta authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the ptheta library: evaluation of the partial theta
 * function theta(q,x) = sum_{j>=0} q^{j(j+1)/2} x^j, its real zeros and
 * critical points, the spectral values q~_j with their double zeros y_j,
 * the companion roots r~_s, the psi/tau/h family, and asymptotic-constant
 * extraction.
 *
 * Numbers cross the boundary as decimal strings: inputs parse any decimal
 * (scientific notation included), outputs are written in scientific
 * notation with the context's working-digits significant digits. Output
 * buffers of PTF_NUM_LEN bytes always suffice for contexts created through
 * this interface.
 *
 * All functions return PTF_OK (0) on success; on failure a thread-local
 * message is available from ptf_last_error(). Handles are opaque and
 * immutable after creation; one context may be shared by any number of
 * threads.
 */

#ifndef PTHETA_PTHETA_H
#define PTHETA_PTHETA_H

#include <stddef.h>

#if defined(_WIN32)
#define PTF_API __declspec(dllexport)
#else
#define PTF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Fixed width of numeric string fields in row structs. */
#define PTF_NUM_LEN 192
/* Contexts created via ptf_ctx_new accept 30..160 working digits so that
 * PTF_NUM_LEN rows always fit. */
#define PTF_MAX_DIGITS 160

typedef enum ptf_status {
  PTF_OK = 0,
  PTF_EINVAL = 1,      /* malformed argument or buffer too small */
  PTF_EDOMAIN = 2,     /* input outside the mathematical domain */
  PTF_EBRACKET = 3,    /* a required sign change is absent */
  PTF_EBUDGET = 4,     /* precision budget exhausted (q too close to 1) */
  PTF_EDEGENERATE = 5, /* fitted sequence does not settle */
  PTF_EINTERNAL = 6
} ptf_status;

typedef struct ptf_ctx ptf_ctx;

/* NULL tolerance strings select the defaults 1e-40 / 1e-30. */
PTF_API ptf_ctx* ptf_ctx_new(int working_digits, const char* tail_tolerance,
                             const char* root_tolerance);
PTF_API void ptf_ctx_free(ptf_ctx* ctx);
PTF_API int ptf_ctx_digits(const ptf_ctx* ctx);

PTF_API const char* ptf_status_str(ptf_status s);
/* Message for the most recent failure on this thread ("" when none). */
PTF_API const char* ptf_last_error(void);
PTF_API const char* ptf_version(void);

/* ---- theta ---------------------------------------------------------- */

/* deriv: 0 = theta, 1 = dtheta/dx, 2 = d2theta/dx2. Any output pointer may
 * be NULL when the caller does not need it. */
PTF_API ptf_status ptf_theta_eval(const ptf_ctx* ctx, const char* q,
                                  const char* x, int deriv, char* value,
                                  size_t value_len, char* tail_bound,
                                  size_t tail_len, long* terms_used);

/* |theta(q,x) - 1 - q x theta(q,qx)| */
PTF_API ptf_status ptf_theta_fe_residual(const ptf_ctx* ctx, const char* q,
                                         const char* x, char* residual,
                                         size_t residual_len);

typedef enum ptf_zero_status {
  PTF_ZERO_RESOLVED = 0,
  PTF_ZERO_COALESCED = 1,
  PTF_ZERO_MISSING = 2
} ptf_zero_status;

typedef struct ptf_zero_row {
  int index;
  int status; /* ptf_zero_status */
  char location[PTF_NUM_LEN];
  char bracket_lo[PTF_NUM_LEN];
  char bracket_hi[PTF_NUM_LEN];
  char residual[PTF_NUM_LEN];
} ptf_zero_row;

/* rows must hold `count` entries; rows[i] describes xi_{i+1}. */
PTF_API ptf_status ptf_real_zeros(const ptf_ctx* ctx, const char* q, int count,
                                  ptf_zero_row* rows);

typedef struct ptf_critical_row {
  int index;
  int is_minimum; /* 1 for t_s, 0 for w_s */
  int found;
  char location[PTF_NUM_LEN];
  char theta_value[PTF_NUM_LEN];
} ptf_critical_row;

/* rows must hold 2*s_max entries, ordered t_1, w_1, t_2, w_2, ... */
PTF_API ptf_status ptf_critical_points(const ptf_ctx* ctx, const char* q,
                                       int s_max, ptf_critical_row* rows);

/* ---- psi family ------------------------------------------------------ */

/* route: 0 = series, 1 = product. */
PTF_API ptf_status ptf_psi_eval(const ptf_ctx* ctx, const char* q, int route,
                                char* value, size_t value_len);

PTF_API ptf_status ptf_lambda_chi(const ptf_ctx* ctx, const char* q, int s,
                                  char* lambda, size_t lambda_len, char* chi,
                                  size_t chi_len);

PTF_API ptf_status ptf_zeta_k(const ptf_ctx* ctx, const char* q, long k,
                              char* value, size_t value_len);

typedef struct ptf_tau_row {
  char q[PTF_NUM_LEN];
  char tau[PTF_NUM_LEN];
  char h[PTF_NUM_LEN];
  char h1[PTF_NUM_LEN];
  char h2[PTF_NUM_LEN];
  char k_est[PTF_NUM_LEN];
} ptf_tau_row;

PTF_API ptf_status ptf_tau_bundle(const ptf_ctx* ctx, const char* q,
                                  ptf_tau_row* row);

/* ---- spectral -------------------------------------------------------- */

typedef struct ptf_rtilde_row {
  int s;
  int status;          /* 0 ok, else the ptf_status of this row's solve */
  int flagged_multiple;
  char r_tilde[PTF_NUM_LEN];
  char z[PTF_NUM_LEN];
  char u[PTF_NUM_LEN];
  char v[PTF_NUM_LEN];
  char residual[PTF_NUM_LEN];
} ptf_rtilde_row;

/* Rows for s = s_lo..s_hi; rows must hold s_hi-s_lo+1 entries. parallelism
 * <= 0 selects the hardware thread count. Per-row failures land in the row
 * status; the call itself fails only if every row failed. */
PTF_API ptf_status ptf_rtilde_range(const ptf_ctx* ctx, int s_lo, int s_hi,
                                    int parallelism, ptf_rtilde_row* rows);

typedef struct ptf_spectral_row {
  int j;
  int status;
  char q_tilde[PTF_NUM_LEN];
  char y[PTF_NUM_LEN];
  char theta_residual[PTF_NUM_LEN];
  char dtheta_residual[PTF_NUM_LEN];
  char bracket_lo[PTF_NUM_LEN];
  char bracket_hi[PTF_NUM_LEN];
} ptf_spectral_row;

PTF_API ptf_status ptf_spectral_range(const ptf_ctx* ctx, int j_lo, int j_hi,
                                      int parallelism, ptf_spectral_row* rows);

typedef struct ptf_ordering_row {
  int j;
  int holds;         /* r_j <= q_j <= r_{j+1} */
  int qt_increasing; /* q_j < q_{j+1}; 1 for the last row */
} ptf_ordering_row;

PTF_API ptf_status ptf_verify_ordering(const ptf_ctx* ctx, int j_max,
                                       int parallelism, ptf_ordering_row* rows,
                                       int* threshold);

/* ---- verification ---------------------------------------------------- */

typedef struct ptf_check_row {
  char name[96];
  long grid_size;
  double worst_margin;
  int pass;
} ptf_check_row;

/* suite: "theta", "psi", "spectral", "asymptotics" or "all". Writes at most
 * max_rows rows and the total into n_rows; all_pass is the AND of the
 * verdicts. */
PTF_API ptf_status ptf_verify(const ptf_ctx* ctx, const char* suite, int j_max,
                              int parallelism, ptf_check_row* rows,
                              int max_rows, int* n_rows, int* all_pass);

/* ---- asymptotics ----------------------------------------------------- */

typedef enum ptf_fit_kind {
  PTF_FIT_QTILDE = 0,
  PTF_FIT_Y = 1,
  PTF_FIT_RTILDE = 2,
  PTF_FIT_Z = 3
} ptf_fit_kind;

typedef struct ptf_fit_row {
  long index;
  char value[PTF_NUM_LEN];    /* sequence member the estimate came from */
  char estimate[PTF_NUM_LEN]; /* per-index constant estimate */
  char h_s[PTF_NUM_LEN];      /* reparameterization diagnostics; empty */
  char d_s[PTF_NUM_LEN];      /*   for the y/z kinds */
  char g_s[PTF_NUM_LEN];
} ptf_fit_row;

typedef struct ptf_fit_summary {
  char constant_name[16];
  char extrapolated[PTF_NUM_LEN];
  double interval_lo; /* paper interval, without slack */
  double interval_hi;
  int in_interval;    /* against the interval +- 0.1 slack */
} ptf_fit_summary;

/* Computes the sequence for index_lo..index_hi (qtilde/y via the spectral
 * solver, rtilde/z via the companion solver), extracts the constant and
 * fills per-index rows plus the summary. When `synthetic` is non-NULL (for
 * example "b=2.0") the sequence is generated from the model with that
 * planted constant instead of being solved. */
PTF_API ptf_status ptf_fit(const ptf_ctx* ctx, ptf_fit_kind kind,
                           long index_lo, long index_hi, int parallelism,
                           const char* synthetic, ptf_fit_row* rows,
                           ptf_fit_summary* summary);

/* Model value with o-terms dropped; constant c is b/b*/alpha/alpha*
 * according to kind. */
PTF_API ptf_status ptf_model_eval(const ptf_ctx* ctx, ptf_fit_kind kind,
                                  const char* constant, long index,
                                  char* value, size_t value_len);

/* alpha = -pi/4 - 2b + pi^2/4 */
PTF_API ptf_status ptf_alpha_from_b(const ptf_ctx* ctx, const char* b,
                                    char* alpha, size_t alpha_len);

#ifdef __cplusplus
}
#endif

#endif /* PTHETA_PTHETA_H */
