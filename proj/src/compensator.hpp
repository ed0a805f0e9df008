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

#ifndef COMBDERATE_COMPENSATOR_H_
#define COMBDERATE_COMPENSATOR_H_

#include <complex>

#include "rational.hpp"

namespace combd {

// Maximally flat 3-tap droop compensator C(z^M) = c0 + c1 z^-M + c2 z^-2M,
// operating on post-decimation samples. Symmetric (c0 = c2) with
// c1 = 1 - (c0 + c2), so the DC gain is exactly 1. Coefficients are exact
// rationals; floats appear only at response evaluation.
struct CompensatorCoeffs {
  Rational c0;
  Rational c1;
  Rational c2;
};

// Single-stage (M-dependent) form: c0 = -(N/32) * (1 - M^-2) / (1 - 2^-2).
// Intended for the narrow-band case (L > 4).
CompensatorCoeffs maxflat_coeffs(int order, int decim);

// Two-stage form behind a derating filter: c0 = -N/24, independent of M.
CompensatorCoeffs maxflat_coeffs_derated(int order);

// C(e^{j omega}) at the output rate.
std::complex<double> compensator_response(const CompensatorCoeffs& coeffs,
                                          double omega);

// Composite magnitude path of the Fig.-8 style comparison: single-stage
// C_{N,M} * H_{N,M}, or two-stage (-N/24 coefficients) * G_{N,M}.
std::complex<double> compensated_response(int order, int decim, bool two_stage,
                                          double omega);

}  // namespace combd

#endif  // COMBDERATE_COMPENSATOR_H_
