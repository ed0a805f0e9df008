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

#ifndef COMBDERATE_SELFTEST_H_
#define COMBDERATE_SELFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

namespace combd {

struct SelftestResult {
  std::string suite;
  bool pass = false;
  std::string detail;  // empty on success
};

// Runs the invariant suites of every module; deterministic for a fixed
// seed (the seed drives the random-stream suites only).
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

}  // namespace combd

#endif  // COMBDERATE_SELFTEST_H_
