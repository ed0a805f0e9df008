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

#include "chain.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "response.hpp"

using namespace combd;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<std::int64_t> impulse(std::size_t length) {
  std::vector<std::int64_t> samples(length, 0);
  samples[0] = 1;
  return samples;
}
}  // namespace

TEST_CASE("word-length plans") {
  SUBCASE("N=3, M=4, B_in=8") {
    const WordLengthPlan plan = plan_wordlength(3, 4, 8);
    CHECK(plan.derate_bits == 3);
    CHECK(plan.comb_growth_bits == 6);
    CHECK(plan.total_bits == 17);  // covers gain 4^3 * 8 = 512 above 8 bits
  }
  SUBCASE("N=1, M=2, B_in=1") {
    const WordLengthPlan plan = plan_wordlength(1, 2, 1);
    CHECK(plan.derate_bits == 5);
    CHECK(plan.total_bits == 1 + 1 + 5);
  }
  SUBCASE("N=6, M=32, B_in=12") {
    const WordLengthPlan plan = plan_wordlength(6, 32, 12);
    CHECK(plan.derate_bits == 2);
    CHECK(plan.comb_growth_bits == 30);
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(plan_wordlength(12, 4, 8), InvalidOrderError);
    CHECK_THROWS_AS(plan_wordlength(0, 4, 8), DegenerateOrderError);
    CHECK_THROWS_AS(plan_wordlength(3, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(plan_wordlength(3, 4, 0), std::invalid_argument);
    // 16 + 11*4 + 5 = 65 bits does not fit the 64-bit registers.
    const WordLengthPlan wide = plan_wordlength(11, 16, 16);
    CHECK(wide.total_bits == 65);
    CHECK_THROWS_AS(FilterChain(11, 16, true, wide), WordLengthError);
  }
}

TEST_CASE("expanded taps match hand convolutions") {
  // Triangle: rect * rect.
  CHECK(expanded_taps(2, 3, false) ==
        std::vector<std::int64_t>{1, 2, 3, 2, 1});
  // [1,1,1,1] * (1,22,1) for the derated N=1, M=4 chain.
  CHECK(expanded_taps(1, 4, true) ==
        std::vector<std::int64_t>{1, 23, 24, 24, 23, 1});
  // Triangle * (1,10,1): tap sum 9 * 12 = 108.
  const auto taps = expanded_taps(2, 3, true);
  CHECK(taps == std::vector<std::int64_t>{1, 12, 24, 34, 24, 12, 1});
  std::int64_t sum = 0;
  for (auto tap : taps) sum += tap;
  CHECK(sum == 108);
}

TEST_CASE("unit impulse responses") {
  SUBCASE("underated N=1, M=4 passes the impulse through") {
    FilterChain chain(1, 4, false, plan_wordlength(1, 4, 8));
    const auto output = chain.process(impulse(12));
    CHECK(output == std::vector<std::int64_t>{1, 0, 0});
    CHECK(chain.dc_gain() == 4);
  }
  SUBCASE("derated N=1, M=4 impulse response decimates the expanded taps") {
    FilterChain chain(1, 4, true, plan_wordlength(1, 4, 8));
    const auto output = chain.process(impulse(12));
    // Full-rate taps [1,23,24,24,23,1] picked at indices 3, 7, 11.
    CHECK(output == std::vector<std::int64_t>{24, 0, 0});
    CHECK(chain.dc_gain() == 96);
  }
}

TEST_CASE("constant input reaches steady-state gain") {
  for (int order : {1, 2, 3, 6}) {
    for (int decim : {3, 4}) {
      for (bool derated : {false, true}) {
        CAPTURE(order);
        CAPTURE(decim);
        CAPTURE(derated);
        FilterChain chain(order, decim, derated,
                          plan_wordlength(order, decim, 8));
        const std::vector<std::int64_t> input(64 * decim, 5);
        const auto output = chain.process(input);
        CHECK(output.back() == 5 * chain.dc_gain());
      }
    }
  }
  // The spec's worked case: constant 5 through N=2, M=3 underated -> 45.
  FilterChain chain(2, 3, false, plan_wordlength(2, 3, 8));
  const auto output = chain.process(std::vector<std::int64_t>(60, 5));
  CHECK(output.back() == 45);
}

TEST_CASE("streaming chain equals the direct-convolution oracle") {
  std::mt19937_64 rng(2024);
  for (int order : {1, 2, 3, 4, 5, 6}) {
    for (int decim : {2, 3, 4, 8}) {
      for (bool derated : {false, true}) {
        CAPTURE(order);
        CAPTURE(decim);
        CAPTURE(derated);
        const WordLengthPlan plan = plan_wordlength(order, decim, 10);
        FilterChain chain(order, decim, derated, plan);
        std::uniform_int_distribution<std::int64_t> dist(-511, 511);
        std::vector<std::int64_t> input(3000);
        for (auto& sample : input) sample = dist(rng);
        CHECK(chain.process(input) ==
              direct_fir_oracle(input, order, decim, derated));
      }
    }
  }
}

TEST_CASE("wraparound at the planned minimum width stays exact") {
  // A long full-scale constant overflows the integrators many times over;
  // modulo arithmetic still recovers the exact convolution.
  const WordLengthPlan plan = plan_wordlength(3, 4, 8);
  FilterChain chain(3, 4, true, plan);
  const std::vector<std::int64_t> input(4000, 127);
  const auto output = chain.process(input);
  CHECK(chain.wrap_count() > 0);
  CHECK(output == direct_fir_oracle(input, 3, 4, true));
  CHECK(output.back() == 127 * chain.dc_gain());

  // Same with a signful random stream.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dist(-127, 127);
  std::vector<std::int64_t> noise(4000);
  for (auto& sample : noise) sample = dist(rng);
  chain.reset();
  CHECK(chain.wrap_count() == 0);
  CHECK(chain.process(noise) == direct_fir_oracle(noise, 3, 4, true));
}

TEST_CASE("derating FIR placement is equivalent on either side") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> dist(-2047, 2047);
  for (int order : {1, 2, 4, 6}) {
    for (int decim : {2, 4, 8}) {
      CAPTURE(order);
      CAPTURE(decim);
      const WordLengthPlan plan = plan_wordlength(order, decim, 12);
      FilterChain before(order, decim, true, plan,
                         FirPlacement::kIntegratorInput);
      FilterChain after(order, decim, true, plan,
                        FirPlacement::kIntegratorOutput);
      std::vector<std::int64_t> input(2500);
      for (auto& sample : input) sample = dist(rng);
      CHECK(before.process(input) == after.process(input));
    }
  }
}

TEST_CASE("push yields exactly one output per M inputs") {
  FilterChain chain(2, 5, true, plan_wordlength(2, 5, 8));
  int outputs = 0;
  for (int n = 0; n < 50; ++n) {
    const auto out = chain.push(1);
    if (out) ++outputs;
    CHECK(out.has_value() == (n % 5 == 4));
  }
  CHECK(outputs == 10);
}

TEST_CASE("empirical response matches the closed forms") {
  const std::vector<double> omegas{0.0, kPi / 4, kPi / 2, 2 * kPi};
  const auto measured = empirical_response(3, 4, true, omegas);
  CHECK(measured[0] == doctest::Approx(1.0).epsilon(1e-4));  // DC probe
  CHECK(measured[1] ==
        doctest::Approx(std::abs(derated_response({3, 4}, kPi / 4)))
            .epsilon(1e-3));
  CHECK(measured[2] == doctest::Approx(0.729833056464).epsilon(1e-3));
  CHECK(measured[3] <= 1e-3);  // folding-band null

  // Underated chain against the conventional comb.
  const std::vector<double> probe{kPi / 3};
  const auto underated = empirical_response(2, 8, false, probe);
  CHECK(underated[0] ==
        doctest::Approx(std::abs(comb_response({2, 8}, kPi / 3)))
            .epsilon(1e-3));

  CHECK_THROWS_AS(
      empirical_response(3, 4, true, std::vector<double>{5.0 * kPi}),
      std::invalid_argument);
}
