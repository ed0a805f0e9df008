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

#include "doctest.h"
#include "errors.hpp"

using namespace combd;

namespace {

// Published coefficient table: N, b_num, b_den, A_N, W_b.
struct Table1Row {
  int order;
  long long b_num, b_den, scale;
  int extra_bits;
};
constexpr Table1Row kTable1[] = {
    {1, 22, 1, 1, 5}, {2, 10, 1, 1, 4},  {3, 6, 1, 1, 3},  {4, 4, 1, 1, 3},
    {5, 14, 5, 5, 5}, {6, 2, 1, 1, 2},   {7, 10, 7, 7, 5}, {8, 1, 1, 1, 2},
    {9, 2, 3, 3, 3},  {10, 2, 5, 5, 4},  {11, 2, 11, 11, 5},
};

}  // namespace

TEST_CASE("derating coefficient b_N = 24/N - 2 in lowest terms") {
  CHECK(derating_coeff(3) == Rational(6, 1));
  CHECK(derating_coeff(5) == Rational(14, 5));
  CHECK(derating_coeff(11) == Rational(2, 11));
  CHECK_THROWS_AS(derating_coeff(12), InvalidOrderError);  // b_12 = 0 boundary
  CHECK_THROWS_AS(derating_coeff(0), DegenerateOrderError);
}

TEST_CASE("derating specs match the published rows") {
  SUBCASE("N=5") {
    const DeratingSpec spec = derating_spec(5);
    CHECK(spec.b == Rational(14, 5));
    CHECK(spec.scale == 5);
    CHECK(spec.taps == std::array<std::int64_t, 3>{5, 14, 5});
    CHECK(spec.norm == 24);
    CHECK(spec.extra_bits == 5);
  }
  SUBCASE("N=9") {
    const DeratingSpec spec = derating_spec(9);
    CHECK(spec.b == Rational(2, 3));
    CHECK(spec.scale == 3);
    CHECK(spec.taps == std::array<std::int64_t, 3>{3, 2, 3});
    CHECK(spec.norm == 8);
    CHECK(spec.extra_bits == 3);
  }
  SUBCASE("N=1") {
    const DeratingSpec spec = derating_spec(1);
    CHECK(spec.b == Rational(22));
    CHECK(spec.scale == 1);
    CHECK(spec.taps == std::array<std::int64_t, 3>{1, 22, 1});
    CHECK(spec.norm == 24);
    CHECK(spec.extra_bits == 5);
  }
}

TEST_CASE("full table reproduces every published row") {
  const auto rows = table1();
  REQUIRE(rows.size() == 11);
  for (const Table1Row& want : kTable1) {
    const DeratingSpec& got = rows[want.order - 1];
    CAPTURE(want.order);
    CHECK(got.order == want.order);
    CHECK(got.b == Rational(want.b_num, want.b_den));
    CHECK(got.scale == want.scale);
    CHECK(got.extra_bits == want.extra_bits);
  }
}

TEST_CASE("spec invariants hold for every valid order") {
  for (int order = 1; order <= 11; ++order) {
    CAPTURE(order);
    const DeratingSpec spec = derating_spec(order);
    const long long g = std::gcd(24, order);
    // A_N * (2 + b_N) = 24 / gcd(24, N) exactly.
    CHECK(Rational(spec.scale) * (Rational(2) + spec.b) == Rational(24 / g));
    CHECK(spec.norm == 24 / g);
    // Palindromic non-negative taps summing to the norm: exact DC gain 1.
    CHECK(spec.taps[0] == spec.taps[2]);
    CHECK(spec.taps[0] >= 0);
    CHECK(spec.taps[1] >= 0);
    CHECK(spec.taps[0] + spec.taps[1] + spec.taps[2] == spec.norm);
    // W_b = ceil(log2(norm)) <= 5, independent of M.
    CHECK(spec.extra_bits <= 5);
    CHECK((1LL << spec.extra_bits) >= spec.norm);
    CHECK((1LL << spec.extra_bits) < 2 * spec.norm);
  }
}

TEST_CASE("validity classification") {
  CHECK(validity_class(0) == ValidityClass::kDegenerate);
  CHECK(validity_class(1) == ValidityClass::kStrictlyValid);
  CHECK(validity_class(6) == ValidityClass::kStrictlyValid);  // b_6 = 2 boundary
  CHECK(validity_class(7) == ValidityClass::kValid);
  CHECK(validity_class(11) == ValidityClass::kValid);
  CHECK(validity_class(12) == ValidityClass::kInvalid);
  CHECK(validity_class(100) == ValidityClass::kInvalid);

  for (int order = 1; order <= 11; ++order) {
    // StrictlyValid iff b_N >= 2; Valid iff 0 < b_N < 2.
    const bool strict = derating_coeff(order) >= Rational(2);
    CHECK((validity_class(order) == ValidityClass::kStrictlyValid) == strict);
  }
}

TEST_CASE("degenerate spec is the pure unit delay") {
  const DeratingSpec spec = DeratingSpec::degenerate();
  CHECK(spec.order == 0);
  CHECK(spec.taps == std::array<std::int64_t, 3>{0, 1, 0});
  CHECK(spec.norm == 1);
  CHECK(spec.extra_bits == 0);
  CHECK_THROWS_AS(derating_spec(0), DegenerateOrderError);
}
