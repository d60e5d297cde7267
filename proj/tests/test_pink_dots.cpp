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

#include <set>

#include "helpers.hpp"
#include "puzzle/pink_dots.hpp"

using namespace puzzle;
using puzzle::testing::w;

namespace {

std::multiset<int> coords(const std::vector<Ray>& rays, Ray::Direction d) {
  std::multiset<int> out;
  for (const Ray& r : rays) {
    if (r.direction == d) out.insert(r.coord);
  }
  return out;
}

PuzzlePath interesting_path() {
  return puzzle::testing::advance_to(PuzzlePath::initial(w("0101"), w("1010")), FillPosition::Kind::Rhombus, 2, 4);
}

}  // namespace

TEST(Rays, InitialPath) {
  const auto rays = place_rays(PuzzlePath::initial(w("0101"), w("1010")));
  using D = Ray::Direction;
  EXPECT_EQ(coords(rays, D::SW), (std::multiset<int>{1, 3}));
  EXPECT_EQ(coords(rays, D::NW), (std::multiset<int>{2, 4}));
  EXPECT_TRUE(coords(rays, D::SE).empty());
  EXPECT_TRUE(coords(rays, D::NE).empty());
  for (const Ray& r : rays) EXPECT_EQ(r.side, Ray::Side::Left);
}

TEST(Rays, FinalPath) {
  const auto rays = place_rays(PuzzlePath::final_path(w("1010")));
  using D = Ray::Direction;
  EXPECT_EQ(coords(rays, D::SE), (std::multiset<int>{2, 4}));
  EXPECT_EQ(coords(rays, D::NE), (std::multiset<int>{1, 2}));
  EXPECT_TRUE(coords(rays, D::SW).empty());
  EXPECT_TRUE(coords(rays, D::NW).empty());
}

TEST(Rays, KinkK) {
  const auto k = puzzle::testing::move_of(interesting_path(), BranchKind::TopK);
  ASSERT_TRUE(k);
  const PuzzlePath p = k->next;
  ASSERT_EQ(p.kink_label(), Label::K);
  const auto rays = place_rays(p);
  int kink_rays = 0;
  for (const Ray& r : rays) kink_rays += r.from_kink;
  EXPECT_EQ(kink_rays, 1);
  // the first /1 after the kink carries a NW ray
  const auto st = p.steps();
  int first_one = -1;
  for (int x = p.kink_index() + 1; x < static_cast<int>(st.size()) && first_one < 0; ++x) {
    if (st[static_cast<std::size_t>(x)].dir == Dir::SW && st[static_cast<std::size_t>(x)].label == Label::One) {
      first_one = x;
    }
  }
  ASSERT_GE(first_one, 0);
  bool found = false;
  for (const Ray& r : rays) found = found || (r.order == first_one && r.direction == Ray::Direction::NW);
  EXPECT_TRUE(found);
}

TEST(Dots, WorkedExample) {
  EXPECT_EQ(path_to_rank(PuzzlePath::initial(w("0101"), w("1010"))).dots, parse_dots("1,2;3,4", 4));
  EXPECT_EQ(path_to_rank(PuzzlePath::final_path(w("1010"))).dots, parse_dots("1,2;2,4", 4));
  const PuzzlePath gk = puzzle::testing::move_of(interesting_path(), BranchKind::TopK)->next;
  const PathRank pr = path_to_rank(gk);
  EXPECT_EQ(pr.dots, parse_dots("1,3;2,2", 4));
  EXPECT_EQ(pr.rank.at(1, 3), 1);
  EXPECT_EQ(pr.rank.at(2, 2), 0);
  EXPECT_EQ(path_codim(gk), 1);
}

TEST(Dots, CountCodimAndIdentificationsOnEveryReachablePath) {
  puzzle::testing::for_all_pairs(5, [](const Word& mu, const Word& nu) {
    const int n = mu.size();
    const int k = mu.ones();
    for (const PuzzlePath& p : puzzle::testing::reachable(mu, nu)) {
      const PathRank pr = path_to_rank(p);
      ASSERT_EQ(pr.dots.size(), n - k) << p.str();
      ASSERT_EQ(path_codim(p), envelope_codim(pr.dots)) << p.str();
    }
  });
}

TEST(Dots, InitialPathIsTheRichardsonVariety) {
  puzzle::testing::for_all_pairs(5, [](const Word& mu, const Word& nu) {
    const PuzzlePath p = PuzzlePath::initial(mu, nu);
    if (!validate_path(p).empty()) return;
    EXPECT_EQ(path_codim(p), 0);
    const DotSet d = path_to_rank(p).dots;
    EXPECT_EQ(envelope(d), std::make_pair(mu, nu));
    EXPECT_EQ(envelope_codim(d), 0);
  });
}

TEST(Dots, FinalPathIsAnOppositeSchubertVariety) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const Word& lambda : all_words(n, k)) {
        const PuzzlePath p = PuzzlePath::final_path(lambda);
        EXPECT_EQ(path_codim(p), 0);
        const PathRank pr = path_to_rank(p);
        for (const RankCondition& c : nontrivial_conditions(pr.dots)) EXPECT_EQ(c.cell.i, 1) << lambda.str();
        int ones = 0;
        for (int j = 1; j <= n; ++j) {
          ones += lambda.bit(j);
          EXPECT_EQ(pr.rank.at(1, j), ones);
        }
      }
    }
  }
}

TEST(Dots, PairingRejectsUnbalancedRays) {
  std::vector<Ray> rays = {{Ray::Side::Left, Ray::Direction::SW, 0, 1, false, Label::Zero}};
  EXPECT_THROW(pair_dots(rays, 3), InvariantError);
}
