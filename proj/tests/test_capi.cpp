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

// Exercises the shared-library surface exactly as an external C client
// would: status codes, opaque handles, plain structs.

#include "combderate.h"

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "doctest.h"

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("status codes and messages") {
  long long num = 0, den = 0;
  CHECK(cd_derating_coeff(3, &num, &den) == CD_OK);
  CHECK(num == 6);
  CHECK(den == 1);
  CHECK(cd_derating_coeff(12, &num, &den) == CD_ERROR_INVALID_ORDER);
  CHECK(cd_derating_coeff(0, &num, &den) == CD_ERROR_DEGENERATE_ORDER);
  CHECK(cd_derating_coeff(3, nullptr, &den) == CD_ERROR_INVALID_ARGUMENT);
  CHECK(std::strlen(cd_status_message(CD_ERROR_INVALID_ORDER)) > 0);
  CHECK(std::strlen(cd_version()) > 0);
}

TEST_CASE("validity classes through the C surface") {
  CHECK(cd_validity_class(0) == CD_VALIDITY_DEGENERATE);
  CHECK(cd_validity_class(6) == CD_VALIDITY_STRICT);
  CHECK(cd_validity_class(11) == CD_VALIDITY_VALID);
  CHECK(cd_validity_class(12) == CD_VALIDITY_INVALID);
}

TEST_CASE("derating spec and table") {
  cd_derating_spec spec{};
  REQUIRE(cd_derating_spec_get(5, &spec) == CD_OK);
  CHECK(spec.b_num == 14);
  CHECK(spec.b_den == 5);
  CHECK(spec.scale == 5);
  CHECK(spec.taps[0] == 5);
  CHECK(spec.taps[1] == 14);
  CHECK(spec.taps[2] == 5);
  CHECK(spec.norm == 24);
  CHECK(spec.extra_bits == 5);

  size_t count = 0;
  CHECK(cd_table1(nullptr, 0, &count) == CD_OK);
  CHECK(count == 11);
  cd_derating_spec rows[11];
  REQUIRE(cd_table1(rows, 11, &count) == CD_OK);
  CHECK(rows[7].order == 8);
  CHECK(rows[7].b_num == 1);
  CHECK(rows[7].extra_bits == 2);
  cd_derating_spec too_small[4];
  CHECK(cd_table1(too_small, 4, &count) == CD_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("responses through the C surface") {
  cd_complex value{};
  REQUIRE(cd_comb_response(3, 4, kPi / 2, &value) == CD_OK);
  CHECK(std::hypot(value.re, value.im) ==
        doctest::Approx(0.743991297813).epsilon(1e-9));
  double limit = 0.0;
  REQUIRE(cd_sinc_limit(3, kPi / 2, &limit) == CD_OK);
  CHECK(limit == doctest::Approx(0.729768918444).epsilon(1e-9));
  REQUIRE(cd_derated_response(3, 4, kPi / 2, &value) == CD_OK);
  CHECK(std::hypot(value.re, value.im) ==
        doctest::Approx(0.729833056464).epsilon(1e-9));
  CHECK(cd_derating_response(12, 4, 0.1, &value) == CD_ERROR_INVALID_ORDER);

  const cd_cascade_stage stages[]{{3, 0}, {1, 1}};
  REQUIRE(cd_cascade_response(stages, 2, 8, 0.0, 1, &value) == CD_OK);
  CHECK(std::hypot(value.re, value.im) == doctest::Approx(1.0));
}

TEST_CASE("deviation metrics through the C surface") {
  double db = 0.0;
  REQUIRE(cd_passband_deviation_db(CD_VARIANT_CONVENTIONAL, 3, 4, 2, &db) ==
          CD_OK);
  CHECK(db == doctest::Approx(0.1676498678).epsilon(1e-8));
  double linear = 0.0;
  REQUIRE(cd_passband_deviation(CD_VARIANT_CONVENTIONAL, 3, 4, 2, &linear) ==
          CD_OK);
  CHECK(linear > 0.0);

  const int ms[]{4, 8};
  double out[2] = {0, 0};
  REQUIRE(cd_deviation_sweep(CD_VARIANT_DERATED, 3, ms, 2, 2, out) == CD_OK);
  CHECK(std::abs(out[0]) <= 0.002);
  CHECK(std::abs(out[1]) <= 0.002);

  const cd_cascade_stage stages[]{{3, 0}, {1, 1}};
  double cascade_db = 0.0;
  REQUIRE(cd_cascade_deviation_db(stages, 2, 8, 2, 0, &cascade_db) == CD_OK);
  double conv_db = 0.0;
  REQUIRE(cd_passband_deviation_db(CD_VARIANT_CONVENTIONAL, 3, 8, 2,
                                   &conv_db) == CD_OK);
  CHECK(cascade_db >= conv_db);

  cd_stopband_report report{};
  REQUIRE(cd_stopband_dominance(3, 4, 2, 1024, &report) == CD_OK);
  CHECK(report.dominant == 1);
  CHECK(report.zero_free == 1);
}

TEST_CASE("compensator through the C surface") {
  cd_compensator_coeffs coeffs{};
  REQUIRE(cd_maxflat_coeffs(3, 4, &coeffs) == CD_OK);
  CHECK(coeffs.c0_num == -15);
  CHECK(coeffs.c0_den == 128);
  CHECK(coeffs.c1_num == 79);
  CHECK(coeffs.c1_den == 64);
  REQUIRE(cd_maxflat_coeffs_derated(3, &coeffs) == CD_OK);
  CHECK(coeffs.c0_num == -1);
  CHECK(coeffs.c0_den == 8);
  cd_complex value{};
  REQUIRE(cd_compensated_response(3, 4, 1, 0.0, &value) == CD_OK);
  CHECK(std::hypot(value.re, value.im) == doctest::Approx(1.0));
}

TEST_CASE("chain lifecycle through opaque handles") {
  cd_wordlength_plan plan{};
  REQUIRE(cd_plan_wordlength(1, 4, 8, &plan) == CD_OK);
  CHECK(plan.total_bits == 8 + 2 + 5);

  cd_chain* chain = nullptr;
  REQUIRE(cd_chain_create(1, 4, 1, 0, &plan, &chain) == CD_OK);
  REQUIRE(chain != nullptr);
  CHECK(cd_chain_dc_gain(chain) == 96);

  std::vector<long long> input(12, 0);
  input[0] = 1;
  long long output[4] = {0, 0, 0, 0};
  size_t n_out = 0;
  REQUIRE(cd_chain_process(chain, input.data(), input.size(), output, 4,
                           &n_out) == CD_OK);
  REQUIRE(n_out == 3);
  CHECK(output[0] == 24);
  CHECK(output[1] == 0);

  long long reference[4];
  size_t n_reference = 0;
  REQUIRE(cd_direct_fir_oracle(input.data(), input.size(), 1, 4, 1, reference,
                               4, &n_reference) == CD_OK);
  REQUIRE(n_reference == n_out);
  CHECK(std::memcmp(output, reference, n_out * sizeof(long long)) == 0);

  cd_chain_reset(chain);
  CHECK(cd_chain_wrap_count(chain) == 0);
  cd_chain_destroy(chain);

  // Too-wide plans are rejected.
  cd_wordlength_plan wide{};
  REQUIRE(cd_plan_wordlength(11, 16, 16, &wide) == CD_OK);
  cd_chain* rejected = nullptr;
  CHECK(cd_chain_create(11, 16, 1, 0, &wide, &rejected) ==
        CD_ERROR_WORDLENGTH);
  CHECK(rejected == nullptr);
}

TEST_CASE("empirical probe through the C surface") {
  const double omegas[]{kPi / 2};
  double mags[1] = {0};
  REQUIRE(cd_empirical_response(3, 4, 1, omegas, 1, mags) == CD_OK);
  CHECK(mags[0] == doctest::Approx(0.729833056464).epsilon(1e-3));
}
