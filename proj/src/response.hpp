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

#ifndef COMBDERATE_RESPONSE_H_
#define COMBDERATE_RESPONSE_H_

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace combd {

// Frequency convention: output rate fixed to 1 Hz, responses evaluated at
// z = e^{j omega / M} for output-rate omega (radians). The pass band is
// [0, pi/L] where L is the decimation factor of the following stages.

// Conventional N-th order comb decimator with decimation factor M.
struct CombSpec {
  int order;  // N >= 1
  int decim;  // M >= 2
};

// Band-edge context of the following decimation stages.
struct BandContext {
  int post_decim;    // L >= 2
  double band_edge;  // omega_C = pi / L <= pi/2
};

BandContext make_band(int post_decim);

// Sampled response over a frequency grid.
struct FrequencyResponse {
  std::vector<double> grid;                  // strictly increasing omega
  std::vector<std::complex<double>> values;  // finite everywhere
  std::vector<double> magnitude_db;
};

// Uniform grid with `points_per_pi` samples per unit of omega/pi.
std::vector<double> make_grid(double omega_max, int points_per_pi);

// H_{N,M}(e^{j omega/M}), DC gain 1, including the linear-phase factor.
// Removable singularities (sin(omega/2M) -> 0) evaluate via the analytic
// limit of the Dirichlet kernel.
std::complex<double> comb_response(const CombSpec& spec, double omega);

// (sin(omega/2)/(omega/2))^N: the M -> infinity numerator of the comb.
double sinc_limit(int order, double omega);

// D_N(e^{j omega/M}) in the exact cosine form; order 0 is e^{-j omega/M}.
// Throws InvalidOrderError for order >= 12.
std::complex<double> derating_response(int order, int decim, double omega);

// G_{N,M} = H_{N,M} * D_N.
std::complex<double> derated_response(const CombSpec& spec, double omega);

// Sharpened comb F = 3 H^2 z^-M - 2 H^3 z^-1 with base comb order 2; the
// alignment delays give both branches the same integer group delay 3M-2.
// When derated, the H^2 branch carries D_4 and the H^3 branch D_6.
std::complex<double> sharpened_response(int decim, double omega, bool derated);

// One stage of a staggered cascade: comb factor of `order` with effective
// length decim + length_offset (offset != 0 places the stage's zeros near,
// but not on, the folding frequencies).
struct CascadeStage {
  int order;
  int length_offset;
};

// Product of per-stage normalized comb responses, each multiplied by the
// derating filter of its own order when derated.
std::complex<double> cascade_response(std::span<const CascadeStage> stages,
                                      int decim, double omega, bool derated);

// Built-in bifurcation stand-in: {(order, 0), (1, +1)} ("3+1" for order 3).
std::vector<CascadeStage> cascade_preset(int order);

enum class Variant {
  kConventional,
  kDerated,
  kSharpened,
  kSharpenedDerated,
  kCascade,
  kCascadeDerated,
};

const char* variant_name(Variant variant);

// |variant| at omega, and the ideal-integrator reference it is measured
// against. For conventional/derated/sharpened the reference is the
// M -> infinity sinc form of Eq.-7 style metrics; for staggered cascades
// each stage keeps its own effective-length sinc numerator, so the metric
// isolates the integrator part (which carries all the M dependency).
double variant_magnitude(Variant variant, int order, int decim, double omega);
double variant_reference(Variant variant, int order, int decim, double omega);

// Pass-band deviation at omega_C = pi/L, as 20*log10 of the magnitude
// ratio (dB) or as the plain magnitude difference.
double passband_deviation_db(Variant variant, int order, int decim,
                             const BandContext& band);
double passband_deviation_linear(Variant variant, int order, int decim,
                                 const BandContext& band);

// Explicit-stage deviation (the Variant entry points use cascade_preset).
double cascade_deviation_db(std::span<const CascadeStage> stages, int decim,
                            const BandContext& band, bool derated);

// Per-M deviation values for one filter variant.
struct DeviationCurve {
  Variant variant;
  int order;
  std::vector<int> m_values;
  std::vector<double> deviation_db;
};

DeviationCurve deviation_sweep(Variant variant, int order,
                               std::span<const int> m_values,
                               const BandContext& band);

// Checks |G| <= |H| beyond the band edge (equivalently |D_N| <= 1, equality
// only at aliases of DC) and, for the monotone orders, that D_N has no
// unit-circle zeros except at omega = M*pi.
struct StopbandReport {
  bool dominant = false;
  double max_ratio = 0.0;
  double worst_omega = 0.0;
  bool zero_free = false;
  double min_mag = 0.0;
};

StopbandReport stopband_dominance(const CombSpec& spec, const BandContext& band,
                                  int grid_points);

}  // namespace combd

#endif  // COMBDERATE_RESPONSE_H_
