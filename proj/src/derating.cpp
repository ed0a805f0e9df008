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

#include "derating.hpp"

#include <numeric>

#include "errors.hpp"

namespace combd {

namespace {

int ceil_log2(std::int64_t value) {
  int bits = 0;
  std::int64_t reach = 1;
  while (reach < value) {
    reach <<= 1;
    ++bits;
  }
  return bits;
}

}  // namespace

ValidityClass validity_class(int order) noexcept {
  if (order <= 0) return ValidityClass::kDegenerate;
  if (order <= 6) return ValidityClass::kStrictlyValid;  // b_N >= 2
  if (order <= 11) return ValidityClass::kValid;         // 0 < b_N < 2
  return ValidityClass::kInvalid;                        // b_N <= 0
}

Rational derating_coeff(int order) {
  if (order == 0) throw DegenerateOrderError();
  if (order < 0 || order >= 12) throw InvalidOrderError(order);
  return Rational(24, order) - Rational(2);
}

DeratingSpec DeratingSpec::degenerate() {
  DeratingSpec spec;
  spec.order = 0;
  spec.b = Rational(0);
  spec.scale = 1;
  spec.taps = {0, 1, 0};
  spec.norm = 1;
  spec.extra_bits = 0;
  return spec;
}

DeratingSpec derating_spec(int order) {
  DeratingSpec spec;
  spec.order = order;
  spec.b = derating_coeff(order);
  spec.scale = order / std::gcd(std::int64_t{24}, std::int64_t{order});
  const Rational center = Rational(spec.scale) * spec.b;
  // A_N clears the denominator of b_N, so the center tap is integral.
  spec.taps = {spec.scale, center.num(), spec.scale};
  spec.norm = spec.taps[0] + spec.taps[1] + spec.taps[2];
  spec.extra_bits = ceil_log2(spec.norm);
  return spec;
}

std::vector<DeratingSpec> table1() {
  std::vector<DeratingSpec> rows;
  rows.reserve(11);
  for (int order = 1; order <= 11; ++order) rows.push_back(derating_spec(order));
  return rows;
}

}  // namespace combd
