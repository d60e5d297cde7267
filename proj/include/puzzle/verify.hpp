/* Copyright 2026 The puzzlepath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puzzle/errors.hpp"
#include "puzzle/filling.hpp"

namespace puzzle {

/// Largest board size the verification suites accept.
constexpr int kMaxVerifyN = 7;
constexpr std::uint64_t kDefaultSeed = 20260101;

/// max_n above kMaxVerifyN.
class ResourceError : public InputError {
 public:
  using InputError::InputError;
};

struct Failure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::int64_t cases = 0;
  /// Total failing cases; `failures` keeps the first few for replay.
  std::int64_t failed = 0;
  std::vector<Failure> failures;
  bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
  int max_n = 5;
  /// Run only this suite; all suites when empty.
  std::optional<std::string> suite;
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  WeightTable table = WeightTable::standard();
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Runs the selected suites for every board size up to max_n. Throws
/// ResourceError if max_n is out of range and InputError for an unknown
/// suite. Reports come back in suite_names() order whatever the schedule.
std::vector<Report> verify_suite(const VerifyOptions& opts);

/// One suite on its own.
Report run_suite(const std::string& name, int max_n, std::uint64_t seed,
                 const WeightTable& table = WeightTable::standard());

}  // namespace puzzle
