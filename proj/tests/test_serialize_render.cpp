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

#include <gtest/gtest.h>

#include <regex>

#include "helpers.hpp"
#include "puzzle/errors.hpp"
#include "puzzle/render.hpp"
#include "puzzle/serialize.hpp"

using namespace puzzle;
using puzzle::testing::w;

TEST(Json, CoefficientRoundTrip) {
  puzzle::testing::for_all_pairs(4, [](const Word& mu, const Word& nu) {
    for (Theory t : kTheories) {
      for (const auto& [lambda, c] : structure_constants(t, mu, nu)) {
        EXPECT_EQ(coefficient_from_json(coefficient_to_json(c), t, mu.size()), c);
      }
    }
  });
}

TEST(Json, WideCoefficientsBecomeStrings) {
  Poly p = Poly::constant(2, 1);
  for (int x = 0; x < 70; ++x) p = p * Poly::constant(2, 2);
  const json j = coefficient_to_json(Coefficient{p});
  ASSERT_EQ(j.size(), 1u);
  EXPECT_TRUE(j[0]["coef"].is_string());
  EXPECT_EQ(j[0]["coef"].get<std::string>(), "1180591620717411303424");
  EXPECT_EQ(coefficient_from_json(j, Theory::H, 2), Coefficient{p});
}

TEST(Json, MalformedTermsAreRejected) {
  EXPECT_THROW(coefficient_from_json(json::parse(R"([{"coef": 1}])"), Theory::H, 2), InputError);
  EXPECT_THROW(coefficient_from_json(json::parse(R"([{"coef": 1, "exp": [1]}])"), Theory::H, 2), InputError);
  EXPECT_THROW(coefficient_from_json(json::parse(R"([{"coef": 1, "exp": [-1, 0]}])"), Theory::HT, 2), InputError);
  EXPECT_THROW(coefficient_from_json(json::parse(R"([{"coef": "x", "exp": [0, 0]}])"), Theory::K, 2), InputError);
}

TEST(Json, ResultRoundTrip) {
  CoefficientResult r;
  r.mu = w("0101");
  r.nu = w("1010");
  r.theory = Theory::KT;
  r.coefficients = structure_constants(Theory::KT, r.mu, r.nu);
  r.puzzle_count = enumerate_puzzles(r.mu, r.nu).size();
  const json j = result_to_json(r);
  for (const char* key : {"n", "k", "mu", "nu", "theory", "coefficients", "puzzle_count"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["puzzle_count"], 6);
  EXPECT_EQ(result_from_json(json::parse(j.dump())), r);
}

TEST(Json, DotsRoundTrip) {
  for (const DotSet& d : all_dotsets(4)) EXPECT_EQ(dots_from_json(dots_to_json(d)), d);
  EXPECT_THROW(dots_from_json(json::parse(R"({"n": 3, "dots": [[2, 1]]})")), InputError);
}

TEST(Json, TraceCarriesWeightsAndLambda) {
  const json j = trace_to_json(trace(w("01"), w("10")));
  EXPECT_FALSE(j.contains("via"));
  const json* leaf = &j;
  int depth = 0;
  while (!(*leaf)["children"].empty()) {
    leaf = &(*leaf)["children"][0];
    EXPECT_TRUE(leaf->contains("via"));
    EXPECT_TRUE((*leaf)["via"].contains("weights"));
    ++depth;
  }
  EXPECT_EQ(depth, 3);
  EXPECT_EQ((*leaf)["lambda"], "10");
}

TEST(Json, Reports) {
  const json j = reports_to_json({Report{"a", 3, 0, {}}, Report{"b", 2, 1, {Failure{"x", "1", "2"}}}});
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["suites"][1]["failures"][0]["inputs"], "x");
  EXPECT_EQ(reports_to_json({Report{"a", 3, 0, {}}})["status"], "pass");
}

TEST(Render, AsciiShape) {
  for (const PuzzleResult& r : enumerate_puzzles(w("0101"), w("1010"))) {
    const std::string s = render_ascii(r.puzzle);
    int rows = 0;
    int tokens = 0;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
      ++rows;
      static const std::regex tok(R"(/[01RK.]_[01RK.]\\[01RK.])");
      const auto n = std::distance(std::sregex_iterator(line.begin(), line.end(), tok), std::sregex_iterator());
      EXPECT_EQ(n, rows);
      EXPECT_EQ(line.find_first_not_of(' '), static_cast<std::size_t>(3 * (4 - rows)));
      tokens += static_cast<int>(n);
    }
    EXPECT_EQ(rows, 4);
    EXPECT_EQ(tokens, 10);
  }
}

TEST(Render, AsciiBoundaryReadsBack) {
  // the S side is the bottom labels of the last row
  const auto all = enumerate_puzzles(w("0101"), w("1010"), w("0110"));
  ASSERT_EQ(all.size(), 1u);
  const std::string s = render_ascii(all[0].puzzle);
  const std::string last = s.substr(s.rfind('/', s.size() - 2) == std::string::npos ? 0 : s.find_last_of('\n', s.size() - 2) + 1);
  std::string bottom;
  for (std::size_t x = 0; x + 2 < last.size(); ++x) {
    if (last[x] == '_') bottom += last[x + 1];
  }
  EXPECT_EQ(bottom, "1010");
}

TEST(Render, Svg) {
  const auto all = enumerate_puzzles(w("0101"), w("1010"));
  for (const PuzzleResult& r : all) {
    const std::string s = render_svg(r.puzzle, "example");
    EXPECT_EQ(s.rfind("<svg", 0) == 0 || s.rfind("<?xml", 0) == 0, true);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
    EXPECT_NE(s.find("example"), std::string::npos);
    std::size_t polys = 0;
    for (std::size_t p = s.find("<polygon"); p != std::string::npos; p = s.find("<polygon", p + 1)) ++polys;
    EXPECT_GE(polys, 10u);
  }
  EXPECT_EQ(svg_filename(read_boundary(all[0].puzzle), 7), "puzzle-0101-1010-" + all[0].lambda.str() + "-007.svg");
}
