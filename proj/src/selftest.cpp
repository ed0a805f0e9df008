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

#include "selftest.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "chain.hpp"
#include "compensator.hpp"
#include "derating.hpp"
#include "response.hpp"

namespace combd {

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

SelftestResult suite_table1() {
  // N, b_num, b_den, A_N, W_b as published.
  static constexpr struct {
    int order;
    long long b_num, b_den, scale;
    int extra_bits;
  } kExpected[] = {
      {1, 22, 1, 1, 5}, {2, 10, 1, 1, 4},  {3, 6, 1, 1, 3},
      {4, 4, 1, 1, 3},  {5, 14, 5, 5, 5},  {6, 2, 1, 1, 2},
      {7, 10, 7, 7, 5}, {8, 1, 1, 1, 2},   {9, 2, 3, 3, 3},
      {10, 2, 5, 5, 4}, {11, 2, 11, 11, 5},
  };
  Check check;
  const auto rows = table1();
  check.expect(rows.size() == 11, "expected 11 rows");
  for (const auto& want : kExpected) {
    const DeratingSpec& got = rows[want.order - 1];
    std::ostringstream tag;
    tag << "row N=" << want.order;
    check.expect(got.b == Rational(want.b_num, want.b_den) &&
                     got.scale == want.scale &&
                     got.extra_bits == want.extra_bits,
                 tag.str());
    check.expect(got.taps[0] == got.taps[2] && got.taps[0] >= 0 &&
                     got.taps[1] >= 0,
                 tag.str() + " taps not palindromic/non-negative");
    check.expect(got.taps[0] + got.taps[1] + got.taps[2] == got.norm,
                 tag.str() + " tap sum != norm");
  }
  return {"table1", check.pass, check.detail.str()};
}

SelftestResult suite_dc_gain() {
  Check check;
  for (int order = 1; order <= 11; ++order) {
    const double h = std::abs(comb_response({order, 4}, 0.0));
    const double g = std::abs(derated_response({order, 4}, 0.0));
    check.expect(std::abs(h - 1.0) < 1e-12 && std::abs(g - 1.0) < 1e-12,
                 "comb/derated DC N=" + std::to_string(order));
  }
  for (bool derated : {false, true}) {
    check.expect(
        std::abs(std::abs(sharpened_response(8, 0.0, derated)) - 1.0) < 1e-12,
        "sharpened DC");
    const auto stages = cascade_preset(3);
    check.expect(
        std::abs(std::abs(cascade_response(stages, 8, 0.0, derated)) - 1.0) <
            1e-12,
        "cascade DC");
  }
  for (bool two_stage : {false, true})
    check.expect(
        std::abs(std::abs(compensated_response(3, 4, two_stage, 0.0)) - 1.0) <
            1e-12,
        "compensated DC");
  return {"dc-gain", check.pass, check.detail.str()};
}

SelftestResult suite_slope_law() {
  Check check;
  const BandContext band = make_band(2);
  const std::vector<int> ms{4, 8, 16, 32};
  std::vector<double> log_m;
  for (int m : ms) log_m.push_back(std::log(static_cast<double>(m)));
  for (int order = 1; order <= 6; ++order) {
    std::vector<double> log_dh, log_dg;
    for (int m : ms) {
      log_dh.push_back(std::log(
          std::abs(passband_deviation_db(Variant::kConventional, order, m, band))));
      log_dg.push_back(std::log(
          std::abs(passband_deviation_db(Variant::kDerated, order, m, band))));
    }
    const double sh = regression_slope(log_m, log_dh);
    const double sg = regression_slope(log_m, log_dg);
    check.expect(std::abs(sh + 2.0) <= 0.15,
                 "conventional slope N=" + std::to_string(order) + " = " +
                     std::to_string(sh));
    check.expect(sg <= -3.5, "derated slope N=" + std::to_string(order) +
                                 " = " + std::to_string(sg));
  }
  return {"slope-law", check.pass, check.detail.str()};
}

SelftestResult suite_derating_ratio() {
  Check check;
  const BandContext band = make_band(2);
  for (int order = 1; order <= 6; ++order) {
    for (int m = 4; m <= 32; m += 4) {
      const double dh =
          passband_deviation_db(Variant::kConventional, order, m, band);
      const double dg = passband_deviation_db(Variant::kDerated, order, m, band);
      std::ostringstream tag;
      tag << "N=" << order << " M=" << m;
      check.expect(std::abs(dg) <= std::abs(dh) / 20.0,
                   tag.str() + " ratio below 20x");
      check.expect(std::abs(dg) <= 0.005, tag.str() + " |dG| above 0.005 dB");
    }
  }
  return {"derating-ratio", check.pass, check.detail.str()};
}

SelftestResult suite_stopband_dominance() {
  Check check;
  const BandContext band = make_band(2);
  for (int order = 1; order <= 11; ++order) {
    for (int m : {4, 8, 16, 32}) {
      const StopbandReport report =
          stopband_dominance({order, m}, band, 2048);
      std::ostringstream tag;
      tag << "N=" << order << " M=" << m;
      check.expect(report.dominant, tag.str() + " not dominant");
      if (order <= 6)
        check.expect(report.zero_free, tag.str() + " unexpected zero");
    }
  }
  return {"stopband-dominance", check.pass, check.detail.str()};
}

SelftestResult suite_oracle_equivalence(std::uint64_t seed) {
  Check check;
  std::mt19937_64 rng(seed);
  constexpr int kInputBits = 12;
  std::uniform_int_distribution<std::int64_t> dist(-(1 << 11) + 1,
                                                   (1 << 11) - 1);
  for (int order : {1, 2, 3, 4, 5, 6}) {
    for (int decim : {2, 3, 4, 8}) {
      for (bool derated : {false, true}) {
        const WordLengthPlan plan = plan_wordlength(order, decim, kInputBits);
        FilterChain chain(order, decim, derated, plan);
        std::vector<std::int64_t> input(2000);
        for (auto& sample : input) sample = dist(rng);
        const auto streamed = chain.process(input);
        const auto reference = direct_fir_oracle(input, order, decim, derated);
        std::ostringstream tag;
        tag << "N=" << order << " M=" << decim << (derated ? " d" : " u");
        check.expect(streamed == reference, tag.str());
      }
    }
  }
  return {"oracle-equivalence", check.pass, check.detail.str()};
}

SelftestResult suite_placement_equivalence(std::uint64_t seed) {
  Check check;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::int64_t> dist(-2047, 2047);
  for (int order : {1, 3, 6}) {
    for (int decim : {3, 4}) {
      const WordLengthPlan plan = plan_wordlength(order, decim, 12);
      FilterChain at_input(order, decim, true, plan,
                           FirPlacement::kIntegratorInput);
      FilterChain at_output(order, decim, true, plan,
                            FirPlacement::kIntegratorOutput);
      std::vector<std::int64_t> input(1500);
      for (auto& sample : input) sample = dist(rng);
      check.expect(at_input.process(input) == at_output.process(input),
                   "N=" + std::to_string(order) + " M=" + std::to_string(decim));
    }
  }
  return {"placement-equivalence", check.pass, check.detail.str()};
}

SelftestResult suite_maxflat_limit() {
  Check check;
  check.expect(maxflat_coeffs(3, 4).c0 == Rational(-15, 128),
               "c0(3,4) != -15/128");
  check.expect(maxflat_coeffs_derated(3).c0 == Rational(-1, 8),
               "derated c0(3) != -1/8");
  for (int order = 1; order <= 11; ++order) {
    const double single = maxflat_coeffs(order, 1000000).c0.to_double();
    const double derated = maxflat_coeffs_derated(order).c0.to_double();
    check.expect(std::abs(single - derated) < 1e-10,
                 "limit mismatch N=" + std::to_string(order));
  }
  return {"maxflat-limit", check.pass, check.detail.str()};
}

SelftestResult suite_empirical_crosscheck() {
  Check check;
  const std::vector<double> omegas{kPi / 4, kPi / 2};
  const auto measured = empirical_response(3, 4, true, omegas, 16, 512);
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const double analytic = std::abs(derated_response({3, 4}, omegas[i]));
    check.expect(std::abs(measured[i] - analytic) <= 1e-3 * analytic,
                 "probe omega=" + std::to_string(omegas[i]));
  }
  return {"empirical-crosscheck", check.pass, check.detail.str()};
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  std::vector<SelftestResult> results;
  results.push_back(suite_table1());
  results.push_back(suite_dc_gain());
  results.push_back(suite_slope_law());
  results.push_back(suite_derating_ratio());
  results.push_back(suite_stopband_dominance());
  results.push_back(suite_oracle_equivalence(seed));
  results.push_back(suite_placement_equivalence(seed));
  results.push_back(suite_maxflat_limit());
  results.push_back(suite_empirical_crosscheck());
  return results;
}

}  // namespace combd
