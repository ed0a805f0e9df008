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

#ifndef COMBDERATE_DERATING_H_
#define COMBDERATE_DERATING_H_

#include <array>
#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace combd {

// Validity of the 3-tap derating filter D_N(z) = (1 + b_N z^-1 + z^-2) /
// (2 + b_N) with b_N = 24/N - 2.
enum class ValidityClass {
  kDegenerate,     // N = 0: b_0 infinite, D_0(z) = z^-1
  kStrictlyValid,  // 1..6: b_N >= 2, no unit-circle zeros except omega = M*pi
  kValid,          // 7..11: 0 < b_N < 2
  kInvalid,        // >= 12: b_N <= 0
};

ValidityClass validity_class(int order) noexcept;

// b_N = 24/N - 2 in lowest terms. Throws DegenerateOrderError for N = 0 and
// InvalidOrderError for N >= 12.
Rational derating_coeff(int order);

// Integer-arithmetic form of one derating filter.
struct DeratingSpec {
  int order = 0;
  Rational b;                           // 24/N - 2, exact
  std::int64_t scale = 1;               // A_N = N / gcd(24, N)
  std::array<std::int64_t, 3> taps{};   // (A_N, A_N*b_N, A_N)
  std::int64_t norm = 1;                // A_N*(2 + b_N) = 24/gcd(24,N) = tap sum
  int extra_bits = 0;                   // W_b = ceil(log2(norm))

  // Pure unit delay for N = 0: taps (0, 1, 0), norm 1.
  static DeratingSpec degenerate();
};

// Errors as derating_coeff.
DeratingSpec derating_spec(int order);

// Rows N = 1..11 of the coefficient/word-length table.
std::vector<DeratingSpec> table1();

}  // namespace combd

#endif  // COMBDERATE_DERATING_H_
