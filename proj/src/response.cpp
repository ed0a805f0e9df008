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

#include "response.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "derating.hpp"
#include "errors.hpp"

namespace combd {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this the quotient form of the Dirichlet ratio loses everything to
// cancellation; the analytic limit is exact to double precision here.
constexpr double kSingularityTol = 1e-12;

void check_comb_spec(const CombSpec& spec) {
  if (spec.order < 1) throw std::invalid_argument("comb order must be >= 1");
  if (spec.decim < 2)
    throw std::invalid_argument("decimation factor must be >= 2");
}

// Zero-phase magnitude of one normalized comb factor of length `length`
// at input-rate angle theta: sin(length*theta/2) / (length*sin(theta/2)).
double comb_factor(int length, double theta) {
  const double half = 0.5 * theta;
  const double s = std::sin(half);
  if (std::abs(s) < kSingularityTol) {
    // theta = 2*pi*k: Dirichlet kernel value (-1)^{k(length-1)}.
    const long long k = std::llround(theta / (2.0 * kPi));
    return (k * (length - 1)) % 2 == 0 ? 1.0 : -1.0;
  }
  return std::sin(length * half) / (length * s);
}

std::complex<double> phase_factor(double delay, double theta) {
  return std::polar(1.0, -delay * theta);
}

// Zero-phase part of D_N at input-rate angle theta: (b_N + 2 cos)/(2+b_N);
// 1 for the degenerate order.
double derating_factor(int order, double theta) {
  if (order == 0) return 1.0;
  const double b = derating_coeff(order).to_double();
  return (b + 2.0 * std::cos(theta)) / (2.0 + b);
}

// sin(x)/x with the removable singularity at 0.
double sinc(double x) {
  if (std::abs(x) < kSingularityTol) return 1.0;
  return std::sin(x) / x;
}

}  // namespace

BandContext make_band(int post_decim) {
  if (post_decim < 2)
    throw std::invalid_argument("post-decimation factor L must be >= 2");
  return BandContext{post_decim, kPi / post_decim};
}

std::vector<double> make_grid(double omega_max, int points_per_pi) {
  if (points_per_pi < 2)
    throw std::invalid_argument("grid density must be >= 2 points per pi");
  if (!(omega_max > 0.0))
    throw std::invalid_argument("grid extent must be positive");
  const auto count =
      static_cast<std::size_t>(std::ceil(omega_max / kPi * points_per_pi)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = omega_max * static_cast<double>(i) /
              static_cast<double>(count - 1);
  return grid;
}

std::complex<double> comb_response(const CombSpec& spec, double omega) {
  check_comb_spec(spec);
  const double theta = omega / spec.decim;
  const double magnitude =
      std::pow(comb_factor(spec.decim, theta), spec.order);
  // N comb factors of length M contribute group delay N*(M-1)/2.
  return magnitude *
         phase_factor(0.5 * spec.order * (spec.decim - 1), theta);
}

double sinc_limit(int order, double omega) {
  if (order < 1) throw std::invalid_argument("sinc_limit order must be >= 1");
  return std::pow(sinc(0.5 * omega), order);
}

std::complex<double> derating_response(int order, int decim, double omega) {
  if (order < 0 || order >= 12) throw InvalidOrderError(order);
  if (decim < 2) throw std::invalid_argument("decimation factor must be >= 2");
  const double theta = omega / decim;
  return derating_factor(order, theta) * phase_factor(1.0, theta);
}

std::complex<double> derated_response(const CombSpec& spec, double omega) {
  return comb_response(spec, omega) *
         derating_response(spec.order, spec.decim, omega);
}

std::complex<double> sharpened_response(int decim, double omega,
                                        bool derated) {
  if (decim < 2) throw std::invalid_argument("decimation factor must be >= 2");
  const double theta = omega / decim;
  const double factor = comb_factor(decim, theta);
  double h2 = factor * factor * factor * factor;  // |H^2|, base order 2
  double h3 = h2 * factor * factor;               // |H^3|
  // Branch delays: 2(M-1) + M and 3(M-1) + 1, both 3M-2 at the input rate.
  double delay = 3.0 * decim - 2.0;
  if (derated) {
    h2 *= derating_factor(4, theta);
    h3 *= derating_factor(6, theta);
    delay += 1.0;  // both branches gain the derating filter's unit delay
  }
  return (3.0 * h2 - 2.0 * h3) * phase_factor(delay, theta);
}

std::vector<CascadeStage> cascade_preset(int order) {
  return {CascadeStage{order, 0}, CascadeStage{1, +1}};
}

std::complex<double> cascade_response(std::span<const CascadeStage> stages,
                                      int decim, double omega, bool derated) {
  if (stages.empty()) throw std::invalid_argument("cascade needs >= 1 stage");
  if (decim < 2) throw std::invalid_argument("decimation factor must be >= 2");
  const double theta = omega / decim;
  double magnitude = 1.0;
  double delay = 0.0;
  for (const CascadeStage& stage : stages) {
    if (stage.order < 0)
      throw std::invalid_argument("cascade stage order must be >= 0");
    const int length = decim + stage.length_offset;
    if (length < 2)
      throw std::invalid_argument("cascade stage length must be >= 2");
    if (stage.order > 0) {
      magnitude *= std::pow(comb_factor(length, theta), stage.order);
      delay += 0.5 * stage.order * (length - 1);
    }
    if (derated) {
      magnitude *= derating_factor(stage.order, theta);
      delay += 1.0;
    }
  }
  return magnitude * phase_factor(delay, theta);
}

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::kConventional:
      return "conventional";
    case Variant::kDerated:
      return "derated";
    case Variant::kSharpened:
      return "sharpened";
    case Variant::kSharpenedDerated:
      return "sharpened-derated";
    case Variant::kCascade:
      return "cascade";
    case Variant::kCascadeDerated:
      return "cascade-derated";
  }
  return "unknown";
}

namespace {

double sharpened_reference(double omega) {
  const double r = sinc(0.5 * omega);
  const double r2 = r * r;
  return std::abs(3.0 * r2 * r2 - 2.0 * r2 * r2 * r2);
}

// Ideal-integrator reference of a staggered cascade: each stage keeps its
// own effective-length sinc numerator so only the integrator deviation
// (the part the derating filter targets) remains in the metric. With zero
// offsets this is exactly the M -> infinity sinc limit.
double cascade_reference(std::span<const CascadeStage> stages, int decim,
                         double omega) {
  const double theta = omega / decim;
  double reference = 1.0;
  for (const CascadeStage& stage : stages) {
    const int length = decim + stage.length_offset;
    reference *= std::pow(sinc(0.5 * length * theta), stage.order);
  }
  return std::abs(reference);
}

}  // namespace

double variant_magnitude(Variant variant, int order, int decim, double omega) {
  switch (variant) {
    case Variant::kConventional:
      return std::abs(comb_response(CombSpec{order, decim}, omega));
    case Variant::kDerated:
      return std::abs(derated_response(CombSpec{order, decim}, omega));
    case Variant::kSharpened:
      return std::abs(sharpened_response(decim, omega, false));
    case Variant::kSharpenedDerated:
      return std::abs(sharpened_response(decim, omega, true));
    case Variant::kCascade: {
      const auto stages = cascade_preset(order);
      return std::abs(cascade_response(stages, decim, omega, false));
    }
    case Variant::kCascadeDerated: {
      const auto stages = cascade_preset(order);
      return std::abs(cascade_response(stages, decim, omega, true));
    }
  }
  throw std::invalid_argument("unknown variant");
}

double variant_reference(Variant variant, int order, int decim, double omega) {
  switch (variant) {
    case Variant::kConventional:
    case Variant::kDerated:
      return sinc_limit(order, omega);
    case Variant::kSharpened:
    case Variant::kSharpenedDerated:
      return sharpened_reference(omega);
    case Variant::kCascade:
    case Variant::kCascadeDerated: {
      const auto stages = cascade_preset(order);
      return cascade_reference(stages, decim, omega);
    }
  }
  throw std::invalid_argument("unknown variant");
}

double passband_deviation_db(Variant variant, int order, int decim,
                             const BandContext& band) {
  const double value = variant_magnitude(variant, order, decim, band.band_edge);
  const double reference =
      variant_reference(variant, order, decim, band.band_edge);
  return 20.0 * std::log10(value / reference);
}

double passband_deviation_linear(Variant variant, int order, int decim,
                                 const BandContext& band) {
  return variant_magnitude(variant, order, decim, band.band_edge) -
         variant_reference(variant, order, decim, band.band_edge);
}

double cascade_deviation_db(std::span<const CascadeStage> stages, int decim,
                            const BandContext& band, bool derated) {
  const double value =
      std::abs(cascade_response(stages, decim, band.band_edge, derated));
  const double reference = cascade_reference(stages, decim, band.band_edge);
  return 20.0 * std::log10(value / reference);
}

DeviationCurve deviation_sweep(Variant variant, int order,
                               std::span<const int> m_values,
                               const BandContext& band) {
  if (m_values.empty())
    throw std::invalid_argument("deviation sweep needs >= 1 decimation factor");
  DeviationCurve curve;
  curve.variant = variant;
  curve.order = order;
  curve.m_values.assign(m_values.begin(), m_values.end());
  curve.deviation_db.reserve(m_values.size());
  for (int m : m_values)
    curve.deviation_db.push_back(passband_deviation_db(variant, order, m, band));
  return curve;
}

StopbandReport stopband_dominance(const CombSpec& spec, const BandContext& band,
                                  int grid_points) {
  check_comb_spec(spec);
  if (spec.order > 11) throw InvalidOrderError(spec.order);
  if (grid_points < 2)
    throw std::invalid_argument("stop-band grid needs >= 2 points");

  const double omega_lo = band.band_edge;
  const double omega_hi = spec.decim * kPi;
  StopbandReport report;
  report.dominant = true;
  // No unit-circle zeros away from omega = M*pi requires b_N >= 2 (the
  // center of D_N never reaches -2 cos theta); for 7 <= N <= 11 a zero
  // sits at cos theta = -b_N/2 regardless of the grid.
  report.zero_free = derating_coeff(spec.order) >= Rational(2);
  report.min_mag = 2.0;
  for (int i = 0; i < grid_points; ++i) {
    const double omega =
        omega_lo + (omega_hi - omega_lo) * (i + 1) / grid_points;
    const double theta = omega / spec.decim;
    const double mag = std::abs(derating_factor(spec.order, theta));
    // |D_N| = 1 is allowed only where the comb itself aliases DC.
    const bool at_dc_alias =
        std::abs(std::remainder(theta, 2.0 * kPi)) < 1e-9;
    if (mag > report.max_ratio) {
      report.max_ratio = mag;
      report.worst_omega = omega;
    }
    if (mag > 1.0 + 1e-12 || (mag > 1.0 - 1e-12 && !at_dc_alias))
      report.dominant = false;
    // D_6 vanishes exactly at theta = pi (omega = M*pi); keep that point
    // out of the minimum-magnitude scan.
    if (std::abs(std::remainder(theta, kPi)) > 1e-9)
      report.min_mag = std::min(report.min_mag, mag);
  }
  return report;
}

}  // namespace combd
