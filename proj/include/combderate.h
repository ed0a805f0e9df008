/*
 * Copyright 2026 The Combderate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * combderate -- C API for derating the decimation-factor dependency of the
 * pass-band droop in N-th order comb (CIC) decimators.
 *
 * The library covers four areas:
 *   - exact rational/integer generation of the 3-tap derating-filter
 *     coefficients b_N = 24/N - 2, their integer scaling and word budget;
 *   - closed-form frequency responses of conventional, derated, sharpened
 *     and staggered-cascade comb decimators plus pass-band deviation
 *     metrics at the band edge pi/L;
 *   - maximally flat 3-tap droop compensators (M-dependent single-stage
 *     and M-independent derated two-stage forms);
 *   - a bit-exact integer streaming simulator of the derated comb chain
 *     under two's-complement modulo arithmetic, with a direct-convolution
 *     oracle and a sine-probe cross-check.
 *
 * Frequency convention: the output sample rate is 1 Hz regardless of the
 * decimation factor M, so responses are evaluated at z = e^{j omega / M}
 * for an output-rate angular frequency omega in [0, M*pi].
 *
 * All functions are thread-safe; the only stateful object is the opaque
 * cd_chain handle, which must not be shared between threads concurrently.
 */

#ifndef COMBDERATE_H_
#define COMBDERATE_H_

#include <stddef.h>

#if defined(_WIN32)
#define CD_API __declspec(dllexport)
#else
#define CD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* ---------------------------------------------------------------------- */
/* Status codes                                                            */

typedef enum cd_status {
  CD_OK = 0,
  CD_ERROR_INVALID_ORDER = 1,    /* N >= 12: b_N <= 0, 3-tap form invalid   */
  CD_ERROR_DEGENERATE_ORDER = 2, /* N == 0 where a positive order is needed */
  CD_ERROR_INVALID_ARGUMENT = 3, /* bad pointer, range or size              */
  CD_ERROR_WORDLENGTH = 4,       /* planned register width exceeds 64 bits  */
  CD_ERROR_INTERNAL = 5
} cd_status;

CD_API const char* cd_status_message(cd_status status);
CD_API const char* cd_version(void);

/* ---------------------------------------------------------------------- */
/* Derating-filter coefficients (integer/rational, exact)                  */

typedef enum cd_validity {
  CD_VALIDITY_DEGENERATE = 0, /* N = 0: D_0(z) = z^-1 (b_0 infinite)     */
  CD_VALIDITY_STRICT = 1,     /* 1 <= N <= 6: b_N >= 2, monotone stop band */
  CD_VALIDITY_VALID = 2,      /* 7 <= N <= 11: 0 < b_N < 2               */
  CD_VALIDITY_INVALID = 3     /* N >= 12: b_N <= 0                       */
} cd_validity;

CD_API cd_validity cd_validity_class(int order);

/* b_N = 24/N - 2 in lowest terms. */
CD_API cd_status cd_derating_coeff(int order, long long* b_num,
                                   long long* b_den);

typedef struct cd_derating_spec {
  int order;              /* N */
  long long b_num, b_den; /* b_N in lowest terms, b_den > 0 */
  long long scale;        /* A_N = N / gcd(24, N) */
  long long taps[3];      /* integer taps (A_N, A_N*b_N, A_N) */
  long long norm;         /* A_N * (2 + b_N) = 24 / gcd(24, N) = tap sum */
  int extra_bits;         /* W_b = ceil(log2(norm)) */
} cd_derating_spec;

CD_API cd_status cd_derating_spec_get(int order, cd_derating_spec* out);

/* Fills rows N = 1..11; capacity must be >= 11 (query count with out=NULL,
 * capacity=0). */
CD_API cd_status cd_table1(cd_derating_spec* out, size_t capacity,
                           size_t* count);

/* ---------------------------------------------------------------------- */
/* Frequency responses and deviation metrics                               */

typedef struct cd_complex {
  double re, im;
} cd_complex;

/* H_{N,M}(e^{j omega/M}), DC gain 1, linear-phase factor included. */
CD_API cd_status cd_comb_response(int order, int decim, double omega,
                                  cd_complex* out);

/* (sin(omega/2) / (omega/2))^N, the M -> infinity reference; 1 at 0. */
CD_API cd_status cd_sinc_limit(int order, double omega, double* out);

/* D_N(e^{j omega/M}); order 0 is the pure delay e^{-j omega/M}. */
CD_API cd_status cd_derating_response(int order, int decim, double omega,
                                      cd_complex* out);

/* G_{N,M} = H_{N,M} * D_N. */
CD_API cd_status cd_derated_response(int order, int decim, double omega,
                                     cd_complex* out);

/* Sharpened comb F = 3 H^2 z^-M - 2 H^3 z^-1 with base order 2; when
 * derated, the H^2 branch carries D_4 and the H^3 branch carries D_6. */
CD_API cd_status cd_sharpened_response(int decim, double omega, int derated,
                                       cd_complex* out);

/* One stage of a staggered cascade: a comb factor of `order` whose
 * effective length is decim + length_offset. */
typedef struct cd_cascade_stage {
  int order;
  int length_offset;
} cd_cascade_stage;

CD_API cd_status cd_cascade_response(const cd_cascade_stage* stages,
                                     size_t n_stages, int decim, double omega,
                                     int derated, cd_complex* out);

typedef enum cd_variant {
  CD_VARIANT_CONVENTIONAL = 0,
  CD_VARIANT_DERATED = 1,
  CD_VARIANT_SHARPENED = 2,
  CD_VARIANT_SHARPENED_DERATED = 3,
  CD_VARIANT_CASCADE = 4, /* built-in preset stages {(order,0),(1,+1)} */
  CD_VARIANT_CASCADE_DERATED = 5
} cd_variant;

/* Pass-band deviation at the band edge omega_C = pi/post_decim:
 * 20*log10 |variant(edge; M)| - 20*log10 |variant reference(edge)|.
 * The reference is the ideal-integrator (sinc) form, i.e. the M -> infinity
 * limit for all non-staggered variants. Positive for conventional combs. */
CD_API cd_status cd_passband_deviation_db(cd_variant variant, int order,
                                          int decim, int post_decim,
                                          double* out_db);

/* Same deviation as a difference of linear magnitudes. */
CD_API cd_status cd_passband_deviation(cd_variant variant, int order,
                                       int decim, int post_decim,
                                       double* out_linear);

/* One deviation value per entry of m_values (all in dB). */
CD_API cd_status cd_deviation_sweep(cd_variant variant, int order,
                                    const int* m_values, size_t n_m,
                                    int post_decim, double* out_db);

/* Deviation of an explicit stage list (CD_VARIANT_CASCADE uses the preset). */
CD_API cd_status cd_cascade_deviation_db(const cd_cascade_stage* stages,
                                         size_t n_stages, int decim,
                                         int post_decim, int derated,
                                         double* out_db);

/* Stop-band check of |G| <= |H| for omega > pi/post_decim, i.e. |D_N| <= 1
 * with equality only at aliases of DC. zero_free reports whether |D_N| > 0
 * on the open stop band (excluding omega = M*pi where D_6 legitimately
 * vanishes). */
typedef struct cd_stopband_report {
  int dominant;
  double max_ratio;   /* max |D_N| over the grid */
  double worst_omega; /* where max_ratio occurs */
  int zero_free;
  double min_mag; /* min |D_N| over the grid away from omega = M*pi */
} cd_stopband_report;

CD_API cd_status cd_stopband_dominance(int order, int decim, int post_decim,
                                       int grid_points,
                                       cd_stopband_report* out);

/* ---------------------------------------------------------------------- */
/* Maximally flat droop compensator (post-decimation, 3-tap narrow band)   */

/* c0 = c2 (symmetry) and c1 = 1 - (c0 + c2) (exact DC gain 1); the values
 * are exact rationals. Single-stage: c0 = -(N/32)(1 - M^-2)/(1 - 2^-2);
 * derated two-stage: c0 = -N/24, independent of M. */
typedef struct cd_compensator_coeffs {
  long long c0_num, c0_den;
  long long c1_num, c1_den;
} cd_compensator_coeffs;

CD_API cd_status cd_maxflat_coeffs(int order, int decim,
                                   cd_compensator_coeffs* out);
CD_API cd_status cd_maxflat_coeffs_derated(int order,
                                           cd_compensator_coeffs* out);

/* Composite response at output-rate omega: single-stage C_{N,M} * H_{N,M},
 * or two-stage (-N/24 coefficients) * G_{N,M}. */
CD_API cd_status cd_compensated_response(int order, int decim, int two_stage,
                                         double omega, cd_complex* out);

/* ---------------------------------------------------------------------- */
/* Bit-exact integer streaming chain (Fig.-2 structure)                    */

typedef struct cd_wordlength_plan {
  int input_bits;       /* B_in */
  int comb_growth_bits; /* N * ceil(log2 M) */
  int derate_bits;      /* W_b */
  int total_bits;       /* register width of every stage */
} cd_wordlength_plan;

CD_API cd_status cd_plan_wordlength(int order, int decim, int input_bits,
                                    cd_wordlength_plan* out);

typedef struct cd_chain cd_chain; /* opaque */

/* fir_at_output selects the alternative derating-filter placement (after
 * the integrator cascade, still before decimation); default is the input
 * of the integral part. The plan's total_bits must be in [1, 64]. */
CD_API cd_status cd_chain_create(int order, int decim, int derated,
                                 int fir_at_output,
                                 const cd_wordlength_plan* plan,
                                 cd_chain** out);
CD_API void cd_chain_destroy(cd_chain* chain);
CD_API void cd_chain_reset(cd_chain* chain);

/* Steady-state DC gain: M^N * (24/gcd(24,N)) when derated, M^N otherwise. */
CD_API long long cd_chain_dc_gain(const cd_chain* chain);

/* Number of register additions that wrapped modulo 2^total_bits so far. */
CD_API unsigned long long cd_chain_wrap_count(const cd_chain* chain);

/* Feeds n_in input-rate samples, emitting one output per M inputs (taken
 * at input indices == M-1 mod M). out_capacity >= n_in/M + 1 suffices. */
CD_API cd_status cd_chain_process(cd_chain* chain, const long long* in,
                                  size_t n_in, long long* out,
                                  size_t out_capacity, size_t* n_out);

/* Ground-truth reference: explicit convolution with the expanded integer
 * taps, 128-bit accumulation, then decimation by M at the same phase. */
CD_API cd_status cd_direct_fir_oracle(const long long* in, size_t n_in,
                                      int order, int decim, int derated,
                                      long long* out, size_t out_capacity,
                                      size_t* n_out);

/* Sine-probes the streaming chain at output-rate frequencies `omegas` and
 * returns gain-normalized magnitudes (cross-check against the closed
 * forms; matches within 1e-3 relative). */
CD_API cd_status cd_empirical_response(int order, int decim, int derated,
                                       const double* omegas, size_t n,
                                       double* out_mags);

/* ---------------------------------------------------------------------- */
/* Built-in self check                                                     */

typedef void (*cd_selftest_callback)(const char* suite, int pass,
                                     const char* detail, void* user);

/* Runs every invariant suite (table1, dc-gain, slope-law, derating-ratio,
 * stopband-dominance, oracle-equivalence, placement-equivalence,
 * maxflat-limit, empirical-crosscheck); returns the number of failures. */
CD_API int cd_selftest(unsigned long long seed, cd_selftest_callback callback,
                       void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* COMBDERATE_H_ */
