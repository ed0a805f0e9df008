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
#include <stdexcept>

#include "derating.hpp"
#include "errors.hpp"

namespace combd {

namespace {

int ceil_log2_int(int value) {
  int bits = 0;
  while ((1LL << bits) < value) ++bits;
  return bits;
}

void check_chain_args(int order, int decim) {
  if (order == 0) throw DegenerateOrderError();
  if (order < 0 || order >= 12) throw InvalidOrderError(order);
  if (decim < 2) throw std::invalid_argument("decimation factor must be >= 2");
}

}  // namespace

WordLengthPlan plan_wordlength(int order, int decim, int input_bits) {
  check_chain_args(order, decim);
  if (input_bits < 1)
    throw std::invalid_argument("input width must be >= 1 bit");
  WordLengthPlan plan;
  plan.input_bits = input_bits;
  plan.comb_growth_bits = order * ceil_log2_int(decim);
  plan.derate_bits = derating_spec(order).extra_bits;
  plan.total_bits =
      plan.input_bits + plan.comb_growth_bits + plan.derate_bits;
  return plan;
}

FilterChain::FilterChain(int order, int decim, bool derated,
                         const WordLengthPlan& plan, FirPlacement placement)
    : order_(order),
      decim_(decim),
      derated_(derated),
      plan_(plan),
      placement_(placement) {
  check_chain_args(order, decim);
  if (plan.total_bits < 1 || plan.total_bits > 64)
    throw WordLengthError(plan.total_bits);
  word_mask_ = plan.total_bits == 64
                   ? ~std::uint64_t{0}
                   : (std::uint64_t{1} << plan.total_bits) - 1;
  const DeratingSpec spec = derating_spec(order);
  taps_[0] = static_cast<std::uint64_t>(spec.taps[0]);
  taps_[1] = static_cast<std::uint64_t>(spec.taps[1]);
  taps_[2] = static_cast<std::uint64_t>(spec.taps[2]);
  integrators_.resize(order);
  differentiators_.resize(order);
  reset();
}

void FilterChain::reset() {
  std::fill(integrators_.begin(), integrators_.end(), 0);
  std::fill(differentiators_.begin(), differentiators_.end(), 0);
  fir_delay_[0] = fir_delay_[1] = 0;
  phase_ = 0;
  wrap_count_ = 0;
}

std::uint64_t FilterChain::mask(std::uint64_t value) const {
  return value & word_mask_;
}

std::uint64_t FilterChain::integrate(std::uint64_t value) {
  for (std::uint64_t& acc : integrators_) {
    const std::uint64_t sum = mask(acc + value);
    // Wrap iff the true sum does not fit the register.
    if (plan_.total_bits == 64 ? (acc + value) < acc
                               : (acc + value) > word_mask_)
      ++wrap_count_;
    acc = sum;
    value = sum;
  }
  return value;
}

std::uint64_t FilterChain::fir(std::uint64_t value) {
  const std::uint64_t out =
      mask(taps_[0] * value + taps_[1] * fir_delay_[0] +
           taps_[2] * fir_delay_[1]);
  fir_delay_[1] = fir_delay_[0];
  fir_delay_[0] = value;
  return out;
}

std::optional<std::int64_t> FilterChain::push(std::int64_t sample) {
  std::uint64_t value = mask(static_cast<std::uint64_t>(sample));
  if (derated_ && placement_ == FirPlacement::kIntegratorInput)
    value = fir(value);
  value = integrate(value);
  if (derated_ && placement_ == FirPlacement::kIntegratorOutput)
    value = fir(value);

  if (++phase_ < decim_) return std::nullopt;
  phase_ = 0;

  // Differentiators run at the output rate.
  for (std::uint64_t& prev : differentiators_) {
    const std::uint64_t diff = mask(value - prev);
    prev = value;
    value = diff;
  }
  if (plan_.total_bits < 64 && (value >> (plan_.total_bits - 1)) != 0)
    return static_cast<std::int64_t>(value | ~word_mask_);
  return static_cast<std::int64_t>(value);
}

std::vector<std::int64_t> FilterChain::process(
    std::span<const std::int64_t> input) {
  std::vector<std::int64_t> output;
  output.reserve(input.size() / decim_ + 1);
  for (std::int64_t sample : input)
    if (auto out = push(sample)) output.push_back(*out);
  return output;
}

std::int64_t FilterChain::dc_gain() const {
  std::uint64_t gain = 1;
  for (int i = 0; i < order_; ++i) gain *= static_cast<std::uint64_t>(decim_);
  if (derated_) gain *= static_cast<std::uint64_t>(taps_[0] + taps_[1] + taps_[2]);
  return static_cast<std::int64_t>(gain);
}

std::vector<std::int64_t> expanded_taps(int order, int decim, bool derated) {
  check_chain_args(order, decim);
  std::vector<std::int64_t> taps{1};
  for (int stage = 0; stage < order; ++stage) {
    std::vector<std::int64_t> next(taps.size() + decim - 1, 0);
    for (std::size_t i = 0; i < taps.size(); ++i)
      for (int j = 0; j < decim; ++j) next[i + j] += taps[i];
    taps = std::move(next);
  }
  if (derated) {
    const DeratingSpec spec = derating_spec(order);
    std::vector<std::int64_t> next(taps.size() + 2, 0);
    for (std::size_t i = 0; i < taps.size(); ++i)
      for (int j = 0; j < 3; ++j) next[i + j] += taps[i] * spec.taps[j];
    taps = std::move(next);
  }
  return taps;
}

std::vector<std::int64_t> direct_fir_oracle(std::span<const std::int64_t> input,
                                            int order, int decim,
                                            bool derated) {
  const std::vector<std::int64_t> taps = expanded_taps(order, decim, derated);
  std::vector<std::int64_t> output;
  output.reserve(input.size() / decim + 1);
  for (std::size_t n = decim - 1; n < input.size();
       n += static_cast<std::size_t>(decim)) {
    __int128 acc = 0;
    const std::size_t k_max = std::min(taps.size() - 1, n);
    for (std::size_t k = 0; k <= k_max; ++k)
      acc += static_cast<__int128>(taps[k]) * input[n - k];
    output.push_back(static_cast<std::int64_t>(acc));
  }
  return output;
}

std::vector<double> empirical_response(int order, int decim, bool derated,
                                       std::span<const double> omegas,
                                       int input_bits, int window_outputs) {
  constexpr double kPi = std::numbers::pi;
  const WordLengthPlan plan = plan_wordlength(order, decim, input_bits);
  FilterChain chain(order, decim, derated, plan);
  const double amplitude =
      static_cast<double>((std::int64_t{1} << (input_bits - 1)) - 1);
  const double gain = static_cast<double>(chain.dc_gain());

  // Outputs before the expanded FIR has filled are transient.
  const int fir_length = order * (decim - 1) + 1 + (derated ? 2 : 0);
  const int skip = (fir_length + decim - 1) / decim + 8;
  const int total_outputs = skip + window_outputs;

  std::vector<double> magnitudes;
  magnitudes.reserve(omegas.size());
  for (double omega : omegas) {
    if (omega < 0.0 || omega > decim * kPi + 1e-9)
      throw std::invalid_argument("probe frequency beyond the input Nyquist");
    const double theta = omega / decim;
    chain.reset();
    std::vector<double> outputs;
    outputs.reserve(total_outputs);
    for (std::int64_t n = 0;
         outputs.size() < static_cast<std::size_t>(total_outputs); ++n) {
      const std::int64_t sample =
          std::llround(amplitude * std::cos(theta * static_cast<double>(n)));
      if (auto out = chain.push(sample))
        outputs.push_back(static_cast<double>(*out));
    }

    // Least-squares fit y[m] ~ a cos(omega m) + b sin(omega m) over the
    // steady-state window; any fixed phase offset lands in (a, b).
    double scc = 0, sss = 0, scs = 0, syc = 0, sys = 0;
    for (int m = skip; m < total_outputs; ++m) {
      const double c = std::cos(omega * m);
      const double s = std::sin(omega * m);
      scc += c * c;
      sss += s * s;
      scs += c * s;
      syc += outputs[m] * c;
      sys += outputs[m] * s;
    }
    const double det = scc * sss - scs * scs;
    double fitted;
    if (det > 1e-9 * (scc + sss + 1.0)) {
      const double a = (syc * sss - sys * scs) / det;
      const double b = (sys * scc - syc * scs) / det;
      fitted = std::hypot(a, b);
    } else if (scc >= sss) {
      // omega == 0 mod 2*pi (DC or an alias of it): plain projection.
      fitted = std::abs(syc / scc);
    } else {
      fitted = std::abs(sys / sss);
    }
    magnitudes.push_back(fitted / (amplitude * gain));
  }
  return magnitudes;
}

}  // namespace combd
