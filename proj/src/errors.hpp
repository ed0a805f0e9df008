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

#ifndef COMBDERATE_ERRORS_H_
#define COMBDERATE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace combd {

// N >= 12: b_N <= 0 violates the stop-band condition; the 3-tap form is
// declared invalid there.
class InvalidOrderError : public std::domain_error {
 public:
  explicit InvalidOrderError(int order)
      : std::domain_error("order " + std::to_string(order) +
                          " out of validity range (N < 12)") {}
};

// N = 0: b_0 is infinite; callers must use the pure-delay filter D_0 = z^-1.
class DegenerateOrderError : public std::domain_error {
 public:
  DegenerateOrderError()
      : std::domain_error(
            "order 0 is degenerate: D_0(z) = z^-1, use the pure-delay "
            "filter") {}
};

// Planned register width not realizable with 64-bit registers.
class WordLengthError : public std::domain_error {
 public:
  explicit WordLengthError(int bits)
      : std::domain_error("register width " + std::to_string(bits) +
                          " exceeds the supported 64 bits") {}
};

}  // namespace combd

#endif  // COMBDERATE_ERRORS_H_
