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

#include "rational.hpp"

#include <random>

#include "doctest.h"

using combd::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(18, 3) == Rational(6, 1));
  CHECK(Rational(14, 5).num() == 14);
  CHECK(Rational(14, 5).den() == 5);
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays exact") {
  CHECK(Rational(24, 3) - Rational(2) == Rational(6));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(5) * Rational(14, 5) == Rational(14));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(-Rational(1, 8) == Rational(-1, 8));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational(-15, 128).to_double() == doctest::Approx(-0.1171875));
}

TEST_CASE("normalization is idempotent over random values") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-500, 500);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t num = dist(rng);
    std::int64_t den = dist(rng);
    if (den == 0) den = 1;
    const Rational value(num, den);
    CHECK(value.den() > 0);
    CHECK(std::gcd(value.num() < 0 ? -value.num() : value.num(), value.den()) <=
          1);
    CHECK(Rational(value.num(), value.den()) == value);
    // Cross-multiplied equality with the unreduced pair.
    CHECK(value.num() * den == num * value.den() ||
          value.num() * -den == num * -value.den());
  }
}
