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

#include <json.hpp>

#include "puzzle/filling.hpp"
#include "puzzle/interval_rank.hpp"
#include "puzzle/verify.hpp"

namespace puzzle {

using json = nlohmann::json;

/// Terms as [{"coef": c, "exp": [e1..en]}, ...] in canonical order. A
/// coefficient too wide for 64 bits is written as a decimal string.
json coefficient_to_json(const Coefficient& c);
/// Inverse of coefficient_to_json; throws InputError on a malformed term.
Coefficient coefficient_from_json(const json& j, Theory t, int n);

struct CoefficientResult {
  Word mu;
  Word nu;
  Theory theory = Theory::H;
  CoefficientMap coefficients;
  std::size_t puzzle_count = 0;
  bool operator==(const CoefficientResult&) const = default;
};

/// {"n", "k", "mu", "nu", "theory", "coefficients": {"<lambda>": terms},
/// "puzzle_count"}
json result_to_json(const CoefficientResult& r);
CoefficientResult result_from_json(const json& j);

/// {"n": n, "dots": [[i, j], ...]}
json dots_to_json(const DotSet& d);
DotSet dots_from_json(const json& j);

json conditions_to_json(const std::vector<RankCondition>& conds);
json branch_to_json(const Branch& b);
/// Node with path, dots, conditions, envelope, codimensions, the move from
/// the parent with its weight in every theory, and the children.
json trace_to_json(const DegenerationNode& root);
json puzzles_to_json(const Word& mu, const Word& nu, const std::vector<PuzzleResult>& puzzles);
/// {"status": "pass"|"fail", "suites": [{"suite", "status", "cases",
/// "failed", "failures": [{"inputs", "expected", "actual"}]}]}
json reports_to_json(const std::vector<Report>& reports);

}  // namespace puzzle
