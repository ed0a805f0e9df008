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

#include "compensator.hpp"

#include <stdexcept>

#include "errors.hpp"
#include "response.hpp"

namespace combd {

namespace {

void check_order(int order) {
  if (order == 0) throw DegenerateOrderError();
  if (order < 0 || order >= 12) throw InvalidOrderError(order);
}

CompensatorCoeffs from_c0(const Rational& c0) {
  CompensatorCoeffs coeffs;
  coeffs.c0 = c0;
  coeffs.c2 = c0;
  coeffs.c1 = Rational(1) - (c0 + c0);
  return coeffs;
}

}  // namespace

CompensatorCoeffs maxflat_coeffs(int order, int decim) {
  check_order(order);
  if (decim < 2) throw std::invalid_argument("decimation factor must be >= 2");
  const std::int64_t m2 = static_cast<std::int64_t>(decim) * decim;
  // -(N/32) * (1 - M^-2) / (1 - 2^-2) = -N (M^2 - 1) / (24 M^2).
  const Rational c0 =
      -(Rational(order, 32) * Rational(m2 - 1, m2) / Rational(3, 4));
  return from_c0(c0);
}

CompensatorCoeffs maxflat_coeffs_derated(int order) {
  check_order(order);
  return from_c0(Rational(-order, 24));
}

std::complex<double> compensator_response(const CompensatorCoeffs& coeffs,
                                          double omega) {
  // Symmetric taps: zero-phase part c1 + 2 c0 cos(omega), unit delay at the
  // output rate.
  const double zero_phase =
      coeffs.c1.to_double() + 2.0 * coeffs.c0.to_double() * std::cos(omega);
  return zero_phase * std::polar(1.0, -omega);
}

std::complex<double> compensated_response(int order, int decim, bool two_stage,
                                          double omega) {
  const CombSpec spec{order, decim};
  if (two_stage) {
    return compensator_response(maxflat_coeffs_derated(order), omega) *
           derated_response(spec, omega);
  }
  return compensator_response(maxflat_coeffs(order, decim), omega) *
         comb_response(spec, omega);
}

}  // namespace combd
