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

// combderate CLI: reproduces the coefficient table and the deviation /
// response curves as CSV, drives the bit-exact streaming simulator, and
// runs the library self check. Everything numerical goes through the
// public C API in combderate.h.
//
// Exit codes: 0 success, 1 selftest failure, 2 argument/validity error,
// 3 input-data error.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "combderate.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputData = 3;

// ---------------------------------------------------------------------
// Output plumbing

class CsvSink {
 public:
  // Empty path means standard output.
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file: " + path);
    }
  }

  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  void comment(const std::string& text) { stream() << "# " << text << "\n"; }
  void line(const std::string& text) { stream() << text << "\n"; }

 private:
  std::ofstream file_;
};

std::string format_db(double value) {
  // Magnitude nulls produce -inf; clamp so rows stay parseable.
  if (!std::isfinite(value)) value = value < 0 ? -999.999999 : 999.999999;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

double magnitude_db(const cd_complex& z) {
  return 20.0 * std::log10(std::hypot(z.re, z.im));
}

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "combderate: " << message << "\n";
  std::exit(code);
}

void check(cd_status status) {
  if (status != CD_OK) fail(kExitUsage, cd_status_message(status));
}

// ---------------------------------------------------------------------
// Shared option structs

struct SweepSpec {
  std::vector<int> values;
  std::string text;
};

// "start:stop:step" (stop inclusive when aligned) or a single integer.
SweepSpec parse_sweep(const std::string& text) {
  SweepSpec sweep;
  sweep.text = text;
  std::vector<long> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t colon = text.find(':', begin);
    const std::string token =
        text.substr(begin, colon == std::string::npos ? colon : colon - begin);
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail(kExitUsage, "cannot parse sweep '" + text + "'");
    parts.push_back(value);
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  if (parts.size() == 1) {
    sweep.values.push_back(static_cast<int>(parts[0]));
  } else if (parts.size() == 3) {
    const long start = parts[0], stop = parts[1], step = parts[2];
    if (step <= 0 || stop < start)
      fail(kExitUsage, "sweep '" + text + "' is not increasing");
    for (long m = start; m <= stop; m += step)
      sweep.values.push_back(static_cast<int>(m));
  } else {
    fail(kExitUsage, "sweep must be a single M or start:stop:step");
  }
  if (sweep.values.empty()) fail(kExitUsage, "empty sweep '" + text + "'");
  for (int m : sweep.values)
    if (m < 2) fail(kExitUsage, "decimation factors must be >= 2");
  return sweep;
}

// "3+1" -> orders {3, 1} with length offsets {0, +1, ...}.
std::vector<cd_cascade_stage> parse_cascade(const std::string& text) {
  std::vector<cd_cascade_stage> stages;
  std::size_t begin = 0;
  int offset = 0;
  while (begin <= text.size()) {
    const std::size_t plus = text.find('+', begin);
    const std::string token =
        text.substr(begin, plus == std::string::npos ? plus : plus - begin);
    int order = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), order);
    if (ec != std::errc() || ptr != token.data() + token.size() || order < 0)
      fail(kExitUsage, "cannot parse cascade spec '" + text + "'");
    stages.push_back({order, offset++});
    if (plus == std::string::npos) break;
    begin = plus + 1;
  }
  if (stages.empty()) fail(kExitUsage, "empty cascade spec");
  return stages;
}

// ---------------------------------------------------------------------
// coeffs

int run_coeffs(int order, bool all, const std::string& out_path) {
  if (!all) {
    const cd_validity validity = cd_validity_class(order);
    if (validity == CD_VALIDITY_DEGENERATE)
      fail(kExitUsage,
           std::string(cd_status_message(CD_ERROR_DEGENERATE_ORDER)));
    if (validity == CD_VALIDITY_INVALID)
      fail(kExitUsage, std::string(cd_status_message(CD_ERROR_INVALID_ORDER)));
  }

  CsvSink sink(out_path);
  std::ostringstream config;
  config << "combderate coeffs "
         << (all ? std::string("--all") : "--order " + std::to_string(order));
  sink.comment(config.str());
  sink.line("N,b_num,b_den,A,taps,norm,W_b");

  cd_derating_spec rows[11];
  size_t count = 0;
  check(cd_table1(rows, 11, &count));
  for (size_t i = 0; i < count; ++i) {
    const cd_derating_spec& row = rows[i];
    if (!all && row.order != order) continue;
    std::ostringstream line;
    line << row.order << ',' << row.b_num << ',' << row.b_den << ','
         << row.scale << ",\"(" << row.taps[0] << ',' << row.taps[1] << ','
         << row.taps[2] << ")\"," << row.norm << ',' << row.extra_bits;
    sink.line(line.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// deviation

enum class CurveMode { kConventional, kSharpened, kCascade };

struct DeviationOptions {
  int order = 3;
  SweepSpec sweep{{4, 8, 12, 16, 20, 24, 28, 32}, "4:32:4"};
  int post_decim = 2;
  CurveMode mode = CurveMode::kConventional;
  std::vector<cd_cascade_stage> stages;
  std::string cascade_text;
  std::string out_path;
};

int run_deviation(const DeviationOptions& opt) {
  CsvSink sink(opt.out_path);
  std::ostringstream config;
  config << "combderate deviation --order " << opt.order << " --m "
         << opt.sweep.text << " --l " << opt.post_decim;
  std::string label = "underated";
  std::string label_derated = "derated";
  if (opt.mode == CurveMode::kSharpened) {
    config << " --sharpened";
    label = "sharpened";
    label_derated = "sharpened_derated";
  } else if (opt.mode == CurveMode::kCascade) {
    config << " --cascade " << opt.cascade_text;
    label = "cascade";
    label_derated = "cascade_derated";
  }
  sink.comment(config.str());
  sink.line("M,deviation_db_" + label + ",deviation_db_" + label_derated);

  for (int m : opt.sweep.values) {
    double underated = 0.0, derated = 0.0;
    switch (opt.mode) {
      case CurveMode::kConventional:
        check(cd_passband_deviation_db(CD_VARIANT_CONVENTIONAL, opt.order, m,
                                       opt.post_decim, &underated));
        check(cd_passband_deviation_db(CD_VARIANT_DERATED, opt.order, m,
                                       opt.post_decim, &derated));
        break;
      case CurveMode::kSharpened:
        check(cd_passband_deviation_db(CD_VARIANT_SHARPENED, opt.order, m,
                                       opt.post_decim, &underated));
        check(cd_passband_deviation_db(CD_VARIANT_SHARPENED_DERATED, opt.order,
                                       m, opt.post_decim, &derated));
        break;
      case CurveMode::kCascade:
        check(cd_cascade_deviation_db(opt.stages.data(), opt.stages.size(), m,
                                      opt.post_decim, 0, &underated));
        check(cd_cascade_deviation_db(opt.stages.data(), opt.stages.size(), m,
                                      opt.post_decim, 1, &derated));
        break;
    }
    sink.line(std::to_string(m) + "," + format_db(underated) + "," +
              format_db(derated));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// response

enum class TwoStageMode { kSingle, kTwo, kBoth };

struct ResponseOptions {
  int order = 3;
  int decim = 4;
  int post_decim = 2;
  int grid = 1024;  // points per unit of omega/pi
  bool derated = false;
  bool with_limit = false;
  CurveMode mode = CurveMode::kConventional;
  bool compensate = false;
  TwoStageMode two_stage = TwoStageMode::kBoth;
  std::vector<cd_cascade_stage> stages;
  std::string cascade_text;
  std::string out_path;
};

int run_response(const ResponseOptions& opt) {
  CsvSink sink(opt.out_path);
  std::ostringstream config;
  config << "combderate response --order " << opt.order << " --m " << opt.decim
         << " --l " << opt.post_decim << " --grid " << opt.grid;
  if (opt.derated) config << " --derated";
  if (opt.with_limit) config << " --limit";
  if (opt.mode == CurveMode::kSharpened) config << " --sharpened";
  if (opt.mode == CurveMode::kCascade)
    config << " --cascade " << opt.cascade_text;
  if (opt.compensate) {
    config << " --compensate --two-stage "
           << (opt.two_stage == TwoStageMode::kSingle  ? "single"
               : opt.two_stage == TwoStageMode::kTwo   ? "two"
                                                       : "both");
  }
  sink.comment(config.str());
  if (opt.compensate && opt.post_decim <= 4)
    sink.comment(
        "warning: 3-tap maximally flat compensator targets the narrow band "
        "(L > 4)");

  std::vector<std::string> columns{"omega_over_pi"};
  if (opt.compensate) {
    if (opt.two_stage != TwoStageMode::kTwo)
      columns.push_back("mag_db_single_stage");
    if (opt.two_stage != TwoStageMode::kSingle)
      columns.push_back("mag_db_two_stage");
  } else {
    std::string base = "underated";
    if (opt.mode == CurveMode::kSharpened) base = "sharpened";
    if (opt.mode == CurveMode::kCascade) base = "cascade";
    columns.push_back("mag_db_" + base);
    if (opt.derated)
      columns.push_back("mag_db_" +
                        (opt.mode == CurveMode::kConventional
                             ? std::string("derated")
                             : base + "_derated"));
    if (opt.with_limit) columns.push_back("mag_db_limit");
  }
  std::string header = columns[0];
  for (std::size_t i = 1; i < columns.size(); ++i) header += "," + columns[i];
  sink.line(header);

  const double omega_max = std::min(opt.decim, 8) * kPi;
  const int points =
      static_cast<int>(std::ceil(omega_max / kPi * opt.grid)) + 1;
  for (int i = 0; i < points; ++i) {
    const double omega = omega_max * i / (points - 1);
    std::string row = format_db(omega / kPi);
    cd_complex value{};
    if (opt.compensate) {
      if (opt.two_stage != TwoStageMode::kTwo) {
        check(cd_compensated_response(opt.order, opt.decim, 0, omega, &value));
        row += "," + format_db(magnitude_db(value));
      }
      if (opt.two_stage != TwoStageMode::kSingle) {
        check(cd_compensated_response(opt.order, opt.decim, 1, omega, &value));
        row += "," + format_db(magnitude_db(value));
      }
    } else {
      switch (opt.mode) {
        case CurveMode::kConventional:
          check(cd_comb_response(opt.order, opt.decim, omega, &value));
          break;
        case CurveMode::kSharpened:
          check(cd_sharpened_response(opt.decim, omega, 0, &value));
          break;
        case CurveMode::kCascade:
          check(cd_cascade_response(opt.stages.data(), opt.stages.size(),
                                    opt.decim, omega, 0, &value));
          break;
      }
      row += "," + format_db(magnitude_db(value));
      if (opt.derated) {
        switch (opt.mode) {
          case CurveMode::kConventional:
            check(cd_derated_response(opt.order, opt.decim, omega, &value));
            break;
          case CurveMode::kSharpened:
            check(cd_sharpened_response(opt.decim, omega, 1, &value));
            break;
          case CurveMode::kCascade:
            check(cd_cascade_response(opt.stages.data(), opt.stages.size(),
                                      opt.decim, omega, 1, &value));
            break;
        }
        row += "," + format_db(magnitude_db(value));
      }
      if (opt.with_limit) {
        double limit = 0.0;
        check(cd_sinc_limit(opt.order, omega, &limit));
        row += "," + format_db(20.0 * std::log10(std::abs(limit)));
      }
    }
    sink.line(row);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// simulate

struct SimulateOptions {
  int order = 1;
  int decim = 4;
  int input_bits = 16;
  bool derated = false;
  bool fir_at_output = false;
  std::string in_path;
  std::string out_path;
};

int run_simulate(const SimulateOptions& opt) {
  std::ifstream in(opt.in_path);
  if (!in) fail(kExitUsage, "cannot open input file: " + opt.in_path);

  const long long limit = 1LL << (opt.input_bits - 1);
  std::vector<long long> samples;
  std::string token;
  while (in >> token) {
    long long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      fail(kExitInputData, "input is not a signed decimal integer: " + token);
    if (value <= -limit || value >= limit)
      fail(kExitInputData,
           "sample " + token + " exceeds the " +
               std::to_string(opt.input_bits) + "-bit input range");
    samples.push_back(value);
  }

  cd_wordlength_plan plan{};
  check(cd_plan_wordlength(opt.order, opt.decim, opt.input_bits, &plan));
  cd_chain* chain = nullptr;
  check(cd_chain_create(opt.order, opt.decim, opt.derated ? 1 : 0,
                        opt.fir_at_output ? 1 : 0, &plan, &chain));

  std::vector<long long> output(samples.size() / opt.decim + 1);
  size_t n_out = 0;
  check(cd_chain_process(chain, samples.data(), samples.size(), output.data(),
                         output.size(), &n_out));
  output.resize(n_out);

  std::vector<long long> reference(samples.size() / opt.decim + 1);
  size_t n_reference = 0;
  check(cd_direct_fir_oracle(samples.data(), samples.size(), opt.order,
                             opt.decim, opt.derated ? 1 : 0, reference.data(),
                             reference.size(), &n_reference));
  reference.resize(n_reference);
  const bool oracle_match = output == reference;

  // Samples go to --out (or stdout); the report goes to whichever of
  // stdout/stderr is left.
  std::ostream* report = &std::cout;
  {
    std::ofstream out_file;
    std::ostream* out_stream = &std::cout;
    if (!opt.out_path.empty()) {
      out_file.open(opt.out_path, std::ios::binary);
      if (!out_file)
        fail(kExitUsage, "cannot open output file: " + opt.out_path);
      out_stream = &out_file;
    } else {
      report = &std::cerr;
    }
    for (long long value : output) *out_stream << value << "\n";
  }

  *report << "plan: input_bits=" << plan.input_bits
          << " comb_growth_bits=" << plan.comb_growth_bits
          << " derate_bits=" << plan.derate_bits
          << " total_bits=" << plan.total_bits << "\n";
  *report << "dc_gain: " << cd_chain_dc_gain(chain) << "\n";
  *report << "outputs: " << n_out << "\n";
  *report << "wrap_events: " << cd_chain_wrap_count(chain) << "\n";
  *report << "oracle_match: " << (oracle_match ? "true" : "false") << "\n";
  cd_chain_destroy(chain);
  return oracle_match ? kExitOk : kExitSelftest;
}

// ---------------------------------------------------------------------
// selftest

void selftest_print(const char* suite, int pass, const char* detail,
                    void* user) {
  auto* failures = static_cast<int*>(user);
  if (!pass) ++*failures;
  std::cout << suite << ": " << (pass ? "PASS" : "FAIL");
  if (!pass && detail != nullptr && detail[0] != '\0')
    std::cout << " (" << detail << ")";
  std::cout << "\n";
}

int run_selftest(unsigned long long seed) {
  int printed_failures = 0;
  const int failures = cd_selftest(seed, selftest_print, &printed_failures);
  std::cout << (failures == 0 ? "all suites passed"
                              : std::to_string(failures) + " suite(s) failed")
            << "\n";
  return failures == 0 ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comb (CIC) decimator derating toolbox"};
  app.require_subcommand(1);

  // coeffs ------------------------------------------------------------
  int coeffs_order = -1;
  bool coeffs_all = false;
  std::string coeffs_out;
  CLI::App* coeffs =
      app.add_subcommand("coeffs", "derating-filter coefficient table");
  CLI::Option* coeffs_order_opt =
      coeffs->add_option("--order", coeffs_order, "filter order N");
  coeffs->add_flag("--all", coeffs_all, "all rows N = 1..11");
  coeffs->add_option("--out", coeffs_out, "output CSV path (default stdout)");

  // deviation (+ sharpen/cascade aliases) ------------------------------
  DeviationOptions dev;
  std::string dev_sweep_text = "4:32:4";
  std::string dev_cascade_text;
  bool dev_sharpened = false;
  CLI::App* deviation = app.add_subcommand(
      "deviation", "pass-band deviation vs M at the band edge pi/L");
  deviation->add_option("--order", dev.order, "comb order N");
  deviation->add_option("--m", dev_sweep_text,
                        "decimation sweep start:stop:step (default 4:32:4)");
  deviation->add_option("--l", dev.post_decim,
                        "post-decimation factor L (default 2)");
  deviation->add_flag("--sharpened", dev_sharpened,
                      "sharpened comb 3H^2 - 2H^3 instead of conventional");
  CLI::Option* dev_cascade_opt = deviation->add_option(
      "--cascade", dev_cascade_text, "staggered cascade spec, e.g. 3+1");
  deviation->add_option("--out", dev.out_path, "output CSV path");

  std::string sharpen_sweep_text = "4:32:4";
  DeviationOptions sharpen_opts;
  CLI::App* sharpen =
      app.add_subcommand("sharpen", "alias for deviation --sharpened");
  sharpen->add_option("--m", sharpen_sweep_text, "decimation sweep");
  sharpen->add_option("--l", sharpen_opts.post_decim, "post-decimation factor");
  sharpen->add_option("--out", sharpen_opts.out_path, "output CSV path");

  std::string cascade_spec_text = "3+1";
  std::string cascade_sweep_text = "4:32:4";
  DeviationOptions cascade_opts;
  CLI::App* cascade =
      app.add_subcommand("cascade", "alias for deviation --cascade");
  cascade->add_option("spec", cascade_spec_text, "cascade spec, e.g. 3+1");
  cascade->add_option("--m", cascade_sweep_text, "decimation sweep");
  cascade->add_option("--l", cascade_opts.post_decim, "post-decimation factor");
  cascade->add_option("--out", cascade_opts.out_path, "output CSV path");

  // response (+ compensate alias) --------------------------------------
  ResponseOptions resp;
  std::string resp_cascade_text;
  bool resp_sharpened = false;
  bool resp_both = false;
  std::string resp_two_stage = "both";
  bool resp_compensate = false;
  CLI::App* response = app.add_subcommand(
      "response", "sampled magnitude responses over [0, min(M,8)*pi]");
  response->add_option("--order", resp.order, "comb order N");
  response->add_option("--m", resp.decim, "decimation factor M");
  response->add_option("--l", resp.post_decim, "post-decimation factor L");
  response->add_option("--grid", resp.grid, "points per unit of omega/pi");
  response->add_flag("--derated", resp.derated, "add the derated column");
  response->add_flag("--both", resp_both, "same as --derated");
  response->add_flag("--limit", resp.with_limit,
                     "add the M->infinity sinc^N column");
  response->add_flag("--sharpened", resp_sharpened, "sharpened comb");
  CLI::Option* resp_cascade_opt =
      response->add_option("--cascade", resp_cascade_text, "cascade spec");
  response->add_flag("--compensate", resp_compensate,
                     "maximally flat compensator composites");
  response->add_option("--two-stage", resp_two_stage,
                       "compensator columns: single|two|both");
  response->add_option("--out", resp.out_path, "output CSV path");

  ResponseOptions comp_opts;
  std::string comp_two_stage = "both";
  CLI::App* compensate =
      app.add_subcommand("compensate", "alias for response --compensate");
  compensate->add_option("--order", comp_opts.order, "comb order N");
  compensate->add_option("--m", comp_opts.decim, "decimation factor M");
  compensate->add_option("--l", comp_opts.post_decim, "post-decimation factor");
  compensate->add_option("--grid", comp_opts.grid, "points per omega/pi");
  compensate->add_option("--two-stage", comp_two_stage, "single|two|both");
  compensate->add_option("--out", comp_opts.out_path, "output CSV path");

  // simulate ------------------------------------------------------------
  SimulateOptions sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "bit-exact integer streaming chain");
  simulate->add_option("--order", sim.order, "comb order N")->required();
  simulate->add_option("--m", sim.decim, "decimation factor M")->required();
  simulate->add_option("--bits", sim.input_bits, "input width B_in (default 16)");
  simulate->add_flag("--derated", sim.derated, "insert the derating FIR");
  simulate->add_flag("--fir-at-output", sim.fir_at_output,
                     "place the FIR after the integrator cascade");
  simulate->add_option("--in", sim.in_path, "newline-delimited input samples")
      ->required();
  simulate->add_option("--out", sim.out_path,
                       "output sample path (default stdout)");

  // selftest ------------------------------------------------------------
  unsigned long long seed = 20260810ULL;
  CLI::App* selftest =
      app.add_subcommand("selftest", "run the library invariant suites");
  selftest->add_option("--seed", seed, "seed for the random-stream suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) {
      if (coeffs_all == (coeffs_order_opt->count() > 0))
        fail(kExitUsage, "coeffs needs exactly one of --order or --all");
      return run_coeffs(coeffs_order, coeffs_all, coeffs_out);
    }
    if (deviation->parsed()) {
      dev.sweep = parse_sweep(dev_sweep_text);
      if (dev_sharpened && dev_cascade_opt->count() > 0)
        fail(kExitUsage, "--sharpened and --cascade are exclusive");
      if (dev_sharpened) dev.mode = CurveMode::kSharpened;
      if (dev_cascade_opt->count() > 0) {
        dev.mode = CurveMode::kCascade;
        dev.cascade_text = dev_cascade_text;
        dev.stages = parse_cascade(dev_cascade_text);
      }
      return run_deviation(dev);
    }
    if (sharpen->parsed()) {
      sharpen_opts.sweep = parse_sweep(sharpen_sweep_text);
      sharpen_opts.mode = CurveMode::kSharpened;
      return run_deviation(sharpen_opts);
    }
    if (cascade->parsed()) {
      cascade_opts.sweep = parse_sweep(cascade_sweep_text);
      cascade_opts.mode = CurveMode::kCascade;
      cascade_opts.cascade_text = cascade_spec_text;
      cascade_opts.stages = parse_cascade(cascade_spec_text);
      return run_deviation(cascade_opts);
    }
    auto to_two_stage = [](const std::string& text) {
      if (text == "single") return TwoStageMode::kSingle;
      if (text == "two") return TwoStageMode::kTwo;
      if (text == "both") return TwoStageMode::kBoth;
      fail(kExitUsage, "--two-stage must be single, two or both");
    };
    if (response->parsed()) {
      resp.derated = resp.derated || resp_both;
      if (resp_sharpened) resp.mode = CurveMode::kSharpened;
      if (resp_cascade_opt->count() > 0) {
        resp.mode = CurveMode::kCascade;
        resp.cascade_text = resp_cascade_text;
        resp.stages = parse_cascade(resp_cascade_text);
      }
      resp.compensate = resp_compensate;
      resp.two_stage = to_two_stage(resp_two_stage);
      return run_response(resp);
    }
    if (compensate->parsed()) {
      comp_opts.compensate = true;
      comp_opts.two_stage = to_two_stage(comp_two_stage);
      return run_response(comp_opts);
    }
    if (simulate->parsed()) return run_simulate(sim);
    if (selftest->parsed()) return run_selftest(seed);
  } catch (const std::exception& e) {
    fail(kExitUsage, e.what());
  }
  return kExitUsage;
}
