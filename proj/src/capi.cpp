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

#include "combderate.h"

#include <complex>
#include <cstring>
#include <new>
#include <span>
#include <vector>

#include "chain.hpp"
#include "compensator.hpp"
#include "derating.hpp"
#include "errors.hpp"
#include "response.hpp"
#include "selftest.hpp"

namespace {

// Every entry point funnels through here so C callers always get a status
// code instead of an exception crossing the ABI.
template <typename Fn>
cd_status guarded(Fn&& fn) {
  try {
    fn();
    return CD_OK;
  } catch (const combd::InvalidOrderError&) {
    return CD_ERROR_INVALID_ORDER;
  } catch (const combd::DegenerateOrderError&) {
    return CD_ERROR_DEGENERATE_ORDER;
  } catch (const combd::WordLengthError&) {
    return CD_ERROR_WORDLENGTH;
  } catch (const std::invalid_argument&) {
    return CD_ERROR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return CD_ERROR_INTERNAL;
  } catch (...) {
    return CD_ERROR_INTERNAL;
  }
}

cd_complex to_c(const std::complex<double>& z) { return {z.real(), z.imag()}; }

void fill_spec(const combd::DeratingSpec& spec, cd_derating_spec* out) {
  out->order = spec.order;
  out->b_num = spec.b.num();
  out->b_den = spec.b.den();
  out->scale = spec.scale;
  out->taps[0] = spec.taps[0];
  out->taps[1] = spec.taps[1];
  out->taps[2] = spec.taps[2];
  out->norm = spec.norm;
  out->extra_bits = spec.extra_bits;
}

combd::Variant to_variant(cd_variant variant) {
  switch (variant) {
    case CD_VARIANT_CONVENTIONAL:
      return combd::Variant::kConventional;
    case CD_VARIANT_DERATED:
      return combd::Variant::kDerated;
    case CD_VARIANT_SHARPENED:
      return combd::Variant::kSharpened;
    case CD_VARIANT_SHARPENED_DERATED:
      return combd::Variant::kSharpenedDerated;
    case CD_VARIANT_CASCADE:
      return combd::Variant::kCascade;
    case CD_VARIANT_CASCADE_DERATED:
      return combd::Variant::kCascadeDerated;
  }
  throw std::invalid_argument("unknown variant");
}

std::vector<combd::CascadeStage> to_stages(const cd_cascade_stage* stages,
                                           size_t n_stages) {
  if (stages == nullptr || n_stages == 0)
    throw std::invalid_argument("null stage list");
  std::vector<combd::CascadeStage> result(n_stages);
  for (size_t i = 0; i < n_stages; ++i)
    result[i] = {stages[i].order, stages[i].length_offset};
  return result;
}

void fill_coeffs(const combd::CompensatorCoeffs& coeffs,
                 cd_compensator_coeffs* out) {
  out->c0_num = coeffs.c0.num();
  out->c0_den = coeffs.c0.den();
  out->c1_num = coeffs.c1.num();
  out->c1_den = coeffs.c1.den();
}

}  // namespace

extern "C" {

struct cd_chain {
  combd::FilterChain impl;
};

const char* cd_status_message(cd_status status) {
  switch (status) {
    case CD_OK:
      return "ok";
    case CD_ERROR_INVALID_ORDER:
      return "order out of validity range (N < 12)";
    case CD_ERROR_DEGENERATE_ORDER:
      return "order 0 is degenerate: D_0(z) = z^-1, use the pure-delay filter";
    case CD_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case CD_ERROR_WORDLENGTH:
      return "planned register width exceeds 64 bits";
    case CD_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* cd_version(void) { return "1.0.0"; }

cd_validity cd_validity_class(int order) {
  switch (combd::validity_class(order)) {
    case combd::ValidityClass::kDegenerate:
      return CD_VALIDITY_DEGENERATE;
    case combd::ValidityClass::kStrictlyValid:
      return CD_VALIDITY_STRICT;
    case combd::ValidityClass::kValid:
      return CD_VALIDITY_VALID;
    case combd::ValidityClass::kInvalid:
      return CD_VALIDITY_INVALID;
  }
  return CD_VALIDITY_INVALID;
}

cd_status cd_derating_coeff(int order, long long* b_num, long long* b_den) {
  return guarded([&] {
    if (b_num == nullptr || b_den == nullptr)
      throw std::invalid_argument("null output");
    const combd::Rational b = combd::derating_coeff(order);
    *b_num = b.num();
    *b_den = b.den();
  });
}

cd_status cd_derating_spec_get(int order, cd_derating_spec* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    fill_spec(combd::derating_spec(order), out);
  });
}

cd_status cd_table1(cd_derating_spec* out, size_t capacity, size_t* count) {
  return guarded([&] {
    if (count == nullptr) throw std::invalid_argument("null count");
    *count = 11;
    if (out == nullptr) {
      if (capacity != 0) throw std::invalid_argument("null output");
      return;
    }
    if (capacity < 11) throw std::invalid_argument("capacity below 11 rows");
    const auto rows = combd::table1();
    for (size_t i = 0; i < rows.size(); ++i) fill_spec(rows[i], &out[i]);
  });
}

cd_status cd_comb_response(int order, int decim, double omega,
                           cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = to_c(combd::comb_response({order, decim}, omega));
  });
}

cd_status cd_sinc_limit(int order, double omega, double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = combd::sinc_limit(order, omega);
  });
}

cd_status cd_derating_response(int order, int decim, double omega,
                               cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = to_c(combd::derating_response(order, decim, omega));
  });
}

cd_status cd_derated_response(int order, int decim, double omega,
                              cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = to_c(combd::derated_response({order, decim}, omega));
  });
}

cd_status cd_sharpened_response(int decim, double omega, int derated,
                                cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out = to_c(combd::sharpened_response(decim, omega, derated != 0));
  });
}

cd_status cd_cascade_response(const cd_cascade_stage* stages, size_t n_stages,
                              int decim, double omega, int derated,
                              cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    const auto list = to_stages(stages, n_stages);
    *out = to_c(combd::cascade_response(list, decim, omega, derated != 0));
  });
}

cd_status cd_passband_deviation_db(cd_variant variant, int order, int decim,
                                   int post_decim, double* out_db) {
  return guarded([&] {
    if (out_db == nullptr) throw std::invalid_argument("null output");
    *out_db = combd::passband_deviation_db(to_variant(variant), order, decim,
                                           combd::make_band(post_decim));
  });
}

cd_status cd_passband_deviation(cd_variant variant, int order, int decim,
                                int post_decim, double* out_linear) {
  return guarded([&] {
    if (out_linear == nullptr) throw std::invalid_argument("null output");
    *out_linear = combd::passband_deviation_linear(
        to_variant(variant), order, decim, combd::make_band(post_decim));
  });
}

cd_status cd_deviation_sweep(cd_variant variant, int order,
                             const int* m_values, size_t n_m, int post_decim,
                             double* out_db) {
  return guarded([&] {
    if (m_values == nullptr || out_db == nullptr || n_m == 0)
      throw std::invalid_argument("null sweep input/output");
    const auto curve = combd::deviation_sweep(
        to_variant(variant), order, std::span<const int>(m_values, n_m),
        combd::make_band(post_decim));
    std::memcpy(out_db, curve.deviation_db.data(), n_m * sizeof(double));
  });
}

cd_status cd_cascade_deviation_db(const cd_cascade_stage* stages,
                                  size_t n_stages, int decim, int post_decim,
                                  int derated, double* out_db) {
  return guarded([&] {
    if (out_db == nullptr) throw std::invalid_argument("null output");
    const auto list = to_stages(stages, n_stages);
    *out_db = combd::cascade_deviation_db(list, decim,
                                          combd::make_band(post_decim),
                                          derated != 0);
  });
}

cd_status cd_stopband_dominance(int order, int decim, int post_decim,
                                int grid_points, cd_stopband_report* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    const combd::StopbandReport report = combd::stopband_dominance(
        {order, decim}, combd::make_band(post_decim), grid_points);
    out->dominant = report.dominant ? 1 : 0;
    out->max_ratio = report.max_ratio;
    out->worst_omega = report.worst_omega;
    out->zero_free = report.zero_free ? 1 : 0;
    out->min_mag = report.min_mag;
  });
}

cd_status cd_maxflat_coeffs(int order, int decim, cd_compensator_coeffs* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    fill_coeffs(combd::maxflat_coeffs(order, decim), out);
  });
}

cd_status cd_maxflat_coeffs_derated(int order, cd_compensator_coeffs* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    fill_coeffs(combd::maxflat_coeffs_derated(order), out);
  });
}

cd_status cd_compensated_response(int order, int decim, int two_stage,
                                  double omega, cd_complex* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    *out =
        to_c(combd::compensated_response(order, decim, two_stage != 0, omega));
  });
}

cd_status cd_plan_wordlength(int order, int decim, int input_bits,
                             cd_wordlength_plan* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output");
    const combd::WordLengthPlan plan =
        combd::plan_wordlength(order, decim, input_bits);
    out->input_bits = plan.input_bits;
    out->comb_growth_bits = plan.comb_growth_bits;
    out->derate_bits = plan.derate_bits;
    out->total_bits = plan.total_bits;
  });
}

cd_status cd_chain_create(int order, int decim, int derated, int fir_at_output,
                          const cd_wordlength_plan* plan, cd_chain** out) {
  return guarded([&] {
    if (plan == nullptr || out == nullptr)
      throw std::invalid_argument("null plan/output");
    const combd::WordLengthPlan core_plan{plan->input_bits,
                                          plan->comb_growth_bits,
                                          plan->derate_bits, plan->total_bits};
    const combd::FirPlacement placement =
        fir_at_output != 0 ? combd::FirPlacement::kIntegratorOutput
                           : combd::FirPlacement::kIntegratorInput;
    *out = new cd_chain{combd::FilterChain(order, decim, derated != 0,
                                           core_plan, placement)};
  });
}

void cd_chain_destroy(cd_chain* chain) { delete chain; }

void cd_chain_reset(cd_chain* chain) {
  if (chain != nullptr) chain->impl.reset();
}

long long cd_chain_dc_gain(const cd_chain* chain) {
  return chain == nullptr ? 0 : chain->impl.dc_gain();
}

unsigned long long cd_chain_wrap_count(const cd_chain* chain) {
  return chain == nullptr ? 0 : chain->impl.wrap_count();
}

cd_status cd_chain_process(cd_chain* chain, const long long* in, size_t n_in,
                           long long* out, size_t out_capacity,
                           size_t* n_out) {
  return guarded([&] {
    if (chain == nullptr || (in == nullptr && n_in != 0) || n_out == nullptr)
      throw std::invalid_argument("null chain/input");
    *n_out = 0;
    for (size_t i = 0; i < n_in; ++i) {
      if (auto value = chain->impl.push(in[i])) {
        if (out == nullptr || *n_out >= out_capacity)
          throw std::invalid_argument("output capacity exhausted");
        out[(*n_out)++] = *value;
      }
    }
  });
}

cd_status cd_direct_fir_oracle(const long long* in, size_t n_in, int order,
                               int decim, int derated, long long* out,
                               size_t out_capacity, size_t* n_out) {
  return guarded([&] {
    if ((in == nullptr && n_in != 0) || n_out == nullptr)
      throw std::invalid_argument("null input/count");
    const std::vector<std::int64_t> input(in, in + n_in);
    const auto result =
        combd::direct_fir_oracle(input, order, decim, derated != 0);
    *n_out = result.size();
    if (result.empty()) return;
    if (out == nullptr || out_capacity < result.size())
      throw std::invalid_argument("output capacity exhausted");
    std::memcpy(out, result.data(), result.size() * sizeof(long long));
  });
}

cd_status cd_empirical_response(int order, int decim, int derated,
                                const double* omegas, size_t n,
                                double* out_mags) {
  return guarded([&] {
    if (omegas == nullptr || out_mags == nullptr || n == 0)
      throw std::invalid_argument("null probe input/output");
    const auto mags = combd::empirical_response(
        order, decim, derated != 0, std::span<const double>(omegas, n));
    std::memcpy(out_mags, mags.data(), n * sizeof(double));
  });
}

int cd_selftest(unsigned long long seed, cd_selftest_callback callback,
                void* user) {
  int failures = 0;
  try {
    for (const combd::SelftestResult& result : combd::run_selftest(seed)) {
      if (!result.pass) ++failures;
      if (callback != nullptr)
        callback(result.suite.c_str(), result.pass ? 1 : 0,
                 result.detail.c_str(), user);
    }
  } catch (...) {
    ++failures;
    if (callback != nullptr) callback("selftest-runner", 0, "exception", user);
  }
  return failures;
}

} /* extern "C" */
