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

#ifndef COMBDERATE_CHAIN_H_
#define COMBDERATE_CHAIN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace combd {

// Register budget for the streaming chain. With total_bits at least
// input_bits + comb_growth_bits + derate_bits, two's-complement wraparound
// arithmetic reproduces exact integer convolution (every expanded tap is
// non-negative, so the true output magnitude is bounded by
// 2^(input_bits-1) * gain).
struct WordLengthPlan {
  int input_bits = 0;
  int comb_growth_bits = 0;  // N * ceil(log2 M)
  int derate_bits = 0;       // W_b
  int total_bits = 0;
};

// Throws InvalidOrderError / DegenerateOrderError outside 1 <= N <= 11.
WordLengthPlan plan_wordlength(int order, int decim, int input_bits);

enum class FirPlacement {
  kIntegratorInput,   // default: smaller words reach the multipliers
  kIntegratorOutput,  // after the accumulators, still before decimation
};

// Streaming derated comb decimator: N integrators -> 3-tap integer FIR ->
// decimate by M -> N differentiators, every register total_bits wide with
// wraparound modulo 2^total_bits. The FIR uses the integer taps
// (A_N, A_N*b_N, A_N); the 1/(A_N(2+b_N)) normalization stays out of the
// chain (reported through dc_gain) so the arithmetic is exact.
class FilterChain {
 public:
  // The plan's total_bits must be in [1, 64] (WordLengthError otherwise);
  // widths below the planned minimum are allowed for wraparound
  // experiments but void the oracle-equivalence guarantee.
  FilterChain(int order, int decim, bool derated, const WordLengthPlan& plan,
              FirPlacement placement = FirPlacement::kIntegratorInput);

  // Consumes one input-rate sample; yields a value on every M-th call
  // (input indices == M-1 mod M).
  std::optional<std::int64_t> push(std::int64_t sample);

  std::vector<std::int64_t> process(std::span<const std::int64_t> input);

  void reset();

  // M^N * (24/gcd(24,N)) when derated, M^N otherwise.
  std::int64_t dc_gain() const;

  // Integrator additions that wrapped modulo 2^total_bits since reset.
  std::uint64_t wrap_count() const { return wrap_count_; }

  const WordLengthPlan& plan() const { return plan_; }
  int order() const { return order_; }
  int decim() const { return decim_; }
  bool derated() const { return derated_; }

 private:
  std::uint64_t mask(std::uint64_t value) const;
  std::uint64_t integrate(std::uint64_t value);
  std::uint64_t fir(std::uint64_t value);

  int order_;
  int decim_;
  bool derated_;
  WordLengthPlan plan_;
  FirPlacement placement_;
  std::uint64_t word_mask_;
  std::uint64_t taps_[3];

  std::vector<std::uint64_t> integrators_;
  std::uint64_t fir_delay_[2];
  std::vector<std::uint64_t> differentiators_;
  int phase_;
  std::uint64_t wrap_count_;
};

// Ground-truth reference: convolution of the input with the expanded taps
// [(1,...,1) of length M] repeated N times (and the integer derating taps
// when derated), accumulated in 128-bit integers, decimated by M at input
// indices == M-1 mod M.
std::vector<std::int64_t> direct_fir_oracle(std::span<const std::int64_t> input,
                                            int order, int decim, bool derated);

// The expanded full-rate integer taps themselves (oracle building block).
std::vector<std::int64_t> expanded_taps(int order, int decim, bool derated);

// Sine-probes the streaming chain at output-rate frequencies and returns
// gain-normalized magnitudes; matches the closed-form responses within
// 1e-3 relative. Probe frequencies must satisfy omega <= M*pi.
std::vector<double> empirical_response(int order, int decim, bool derated,
                                       std::span<const double> omegas,
                                       int input_bits = 16,
                                       int window_outputs = 2048);

}  // namespace combd

#endif  // COMBDERATE_CHAIN_H_
