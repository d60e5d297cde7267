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

#include "helpers.hpp"
#include "puzzle/filling.hpp"
#include "puzzle/pink_dots.hpp"

using namespace puzzle;
using puzzle::testing::w;

namespace {

std::map<std::string, std::string> rendered(const CoefficientMap& m) {
  std::map<std::string, std::string> out;
  for (const auto& [lambda, c] : m) out[lambda.str()] = render(c);
  return out;
}

PuzzlePath at_24() {
  return puzzle::testing::advance_to(PuzzlePath::initial(w("0101"), w("1010")), FillPosition::Kind::Rhombus, 2, 4);
}

const DegenerationNode* child(const DegenerationNode& n, BranchKind k) {
  for (const DegenerationNode& c : n.children) {
    if (c.via && c.via->kind == k) return &c;
  }
  return nullptr;
}

// Follows boring steps until the node has more than one child or none.
const DegenerationNode& fork(const DegenerationNode& n) {
  const DegenerationNode* cur = &n;
  while (cur->children.size() == 1) cur = &cur->children.front();
  return *cur;
}

}  // namespace

TEST(Catalog, InterestingStepOfTheWorkedExample) {
  const PuzzlePath p = at_24();
  ASSERT_EQ(p.kink_label(), Label::One);
  const auto moves = legal_branches(p);
  ASSERT_EQ(moves.size(), 4u);
  EXPECT_EQ(to_string(moves[0].branch), "Equivariant at Rhombus(2,4) -> /0 \\1");
  EXPECT_EQ(to_string(moves[1].branch), "ShiftZero at Rhombus(2,4) -> /R \\0 -0");
  EXPECT_EQ(to_string(moves[2].branch), "ShiftOne at Rhombus(2,4) -> /1 \\R -1");
  EXPECT_EQ(to_string(moves[3].branch), "TopK at Rhombus(2,4) -> /1 \\K");
  EXPECT_THROW(legal_branches(PuzzlePath::final_path(w("01"))), InvariantError);
}

TEST(Catalog, KinkKOverZeroIsBoring) {
  int seen = 0;
  puzzle::testing::for_all_pairs(5, [&](const Word& mu, const Word& nu) {
    for (const PuzzlePath& p : puzzle::testing::reachable(mu, nu)) {
      if (p.is_final() || p.kink_label() != Label::K) continue;
      const auto st = p.steps();
      const auto& next = st[static_cast<std::size_t>(p.kink_index() + 1)];
      if (next.dir != Dir::SW || next.label != Label::Zero) continue;
      const auto moves = legal_branches(p);
      ASSERT_EQ(moves.size(), 1u);
      EXPECT_EQ(moves[0].branch.kind, BranchKind::Boring);
      EXPECT_EQ(moves[0].branch.ul, Label::Zero);
      EXPECT_EQ(moves[0].branch.ll, Label::K);
      ++seen;
    }
  });
  EXPECT_GT(seen, 0);
}

TEST(Catalog, ShiftAndTopKExistenceRule) {
  puzzle::testing::for_all_pairs(5, [](const Word& mu, const Word& nu) {
    for (const PuzzlePath& p : puzzle::testing::reachable(mu, nu)) {
      if (p.is_final()) continue;
      const auto moves = legal_branches(p);
      bool s0 = false;
      bool s1 = false;
      bool tk = false;
      bool eq = false;
      for (const Move& m : moves) {
        s0 = s0 || m.branch.kind == BranchKind::ShiftZero;
        s1 = s1 || m.branch.kind == BranchKind::ShiftOne;
        tk = tk || m.branch.kind == BranchKind::TopK;
        eq = eq || m.branch.kind == BranchKind::Equivariant;
        EXPECT_TRUE(validate_path(m.next).empty());
      }
      if (!eq) {
        EXPECT_EQ(moves.size(), 1u);
        continue;
      }
      EXPECT_TRUE(s0 || s1);
      EXPECT_EQ(tk, s0 && s1);
    }
  });
}

TEST(Weights, Examples) {
  const auto moves = legal_branches(at_24());
  EXPECT_EQ(render(branch_weight(Theory::HT, moves[0].branch, 4)), "-1*y2 + 1*y4");
  EXPECT_EQ(render(branch_weight(Theory::KT, moves[3].branch, 4)), "-1*E(0,1,0,-1)");
  EXPECT_EQ(render(branch_weight(Theory::KT, moves[0].branch, 4)), "-1*E(0,1,0,-1) + 1");
  EXPECT_EQ(render(branch_weight(Theory::K, moves[3].branch, 4)), "-1");
  EXPECT_EQ(render(branch_weight(Theory::H, moves[0].branch, 4)), "0");
  const Branch s1{BranchKind::ShiftOne, {FillPosition::Kind::Rhombus, 2, 1, 2}, Label::One, Label::R, Label::One};
  EXPECT_EQ(render(branch_weight(Theory::KT, s1, 4)), "1*E(1,-1,0,0)");
  for (Theory t : kTheories) {
    EXPECT_EQ(render(branch_weight(t, legal_branches(PuzzlePath::initial(w("0101"), w("1010"))).front().branch, 4)),
              "1");
  }
}

TEST(Weights, CorruptedTableOnlyFlipsTopK) {
  const WeightTable a = WeightTable::standard();
  const WeightTable b = WeightTable::corrupted();
  for (Theory t : kTheories) {
    for (int k = 0; k < kBranchKinds; ++k) {
      const auto kind = static_cast<BranchKind>(k);
      if (t == Theory::KT && kind == BranchKind::TopK) {
        EXPECT_NE(a.get(t, kind), b.get(t, kind));
      } else {
        EXPECT_EQ(a.get(t, kind), b.get(t, kind));
      }
    }
  }
}

TEST(Structure, WorkedExample) {
  const Word mu = w("0101");
  const Word nu = w("1010");
  using M = std::map<std::string, std::string>;
  EXPECT_EQ(rendered(structure_constants(Theory::H, mu, nu)), (M{{"0110", "1"}, {"1001", "1"}}));
  EXPECT_EQ(rendered(structure_constants(Theory::HT, mu, nu)),
            (M{{"0110", "1"}, {"1001", "1"}, {"1010", "-1*y1 + 1*y4"}}));
  EXPECT_EQ(rendered(structure_constants(Theory::K, mu, nu)), (M{{"0101", "-1"}, {"0110", "1"}, {"1001", "1"}}));
  EXPECT_EQ(rendered(structure_constants(Theory::KT, mu, nu)), (M{{"0101", "-1*E(1,0,0,-1)"},
                                                                  {"0110", "1*E(1,0,0,-1)"},
                                                                  {"1001", "1*E(1,0,0,-1)"},
                                                                  {"1010", "-1*E(1,0,0,-1) + 1"}}));
}

TEST(Structure, IdentityAndEmptyCases) {
  for (Theory t : kTheories) {
    EXPECT_EQ(rendered(structure_constants(t, w("0011"), w("0011"))),
              (std::map<std::string, std::string>{{"0011", "1"}}));
  }
  // 1100 on the NE side cannot be degenerated towards 0011 on the bottom
  EXPECT_TRUE(structure_constants(Theory::KT, w("1100"), w("0011")).empty());
  EXPECT_THROW(structure_constants(Theory::H, w("0101"), w("10100")), InputError);
  EXPECT_THROW(structure_constants(Theory::H, w("0101"), w("1110")), InputError);
}

TEST(Structure, SumOfPuzzleWeights) {
  // the pruned search agrees with summing weights over the full puzzle list
  puzzle::testing::for_all_pairs(4, [](const Word& mu, const Word& nu) {
    for (Theory t : kTheories) {
      CoefficientMap sum;
      for (const PuzzleResult& r : enumerate_puzzles(mu, nu, std::nullopt, t)) {
        auto [it, inserted] = sum.try_emplace(r.lambda, r.weight);
        if (!inserted) {
          std::visit(
              [&](auto& acc) {
                using P = std::decay_t<decltype(acc)>;
                acc += std::get<P>(r.weight);
              },
              it->second);
        }
      }
      std::erase_if(sum, [](const auto& kv) {
        return std::visit([](const auto& p) { return p.is_zero(); }, kv.second);
      });
      EXPECT_EQ(sum, structure_constants(t, mu, nu)) << to_string(t) << " " << mu.str() << " " << nu.str();
    }
  });
}

TEST(Structure, ParallelMatchesSerial) {
  for (int threads : {1, 2, 3}) {
    puzzle::testing::for_all_pairs(5, [&](const Word& mu, const Word& nu) {
      for (Theory t : kTheories) {
        ASSERT_EQ(structure_constants_parallel(t, mu, nu, threads), structure_constants(t, mu, nu));
      }
    });
  }
  const auto table = structure_table(Theory::KT, 5, 2, 2);
  ASSERT_EQ(table.size(), 100u);
  for (const TableEntry& e : table) EXPECT_EQ(e.coefficients, structure_constants(Theory::KT, e.mu, e.nu));
  EXPECT_THROW(structure_table(Theory::H, 3, 4), InputError);
}

TEST(Puzzles, WorkedExample) {
  const Word mu = w("0101");
  const Word nu = w("1010");
  EXPECT_EQ(enumerate_puzzles(mu, nu).size(), 6u);
  EXPECT_EQ(enumerate_puzzles(mu, nu, std::nullopt, Theory::H).size(), 2u);
  const auto at1001 = enumerate_puzzles(mu, nu, w("1001"));
  ASSERT_EQ(at1001.size(), 2u);
  int plain = 0;
  int with_k = 0;
  for (const PuzzleResult& r : at1001) {
    if (r.puzzle.count(BranchKind::TopK) == 1 && r.puzzle.count(BranchKind::Equivariant) == 1) ++with_k;
    if (r.puzzle.count(BranchKind::TopK) == 0 && r.puzzle.count(BranchKind::Equivariant) == 0) ++plain;
  }
  EXPECT_EQ(plain, 1);
  EXPECT_EQ(with_k, 1);
  EXPECT_EQ(enumerate_puzzles(mu, nu, w("0110")).size(), 1u);
  const auto id = enumerate_puzzles(w("0011"), w("0011"));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].lambda, w("0011"));
  EXPECT_EQ(render(id[0].weight), "1");
  EXPECT_THROW(enumerate_puzzles(mu, nu, w("011")), InputError);
}

TEST(Puzzles, InversionCountBalance) {
  puzzle::testing::for_all_pairs(6, [](const Word& mu, const Word& nu) {
    for (const PuzzleResult& r : enumerate_puzzles(mu, nu)) {
      ASSERT_EQ(inversions(nu) + r.puzzle.count(BranchKind::Equivariant),
                inversions(r.lambda) + inversions(mu) + r.puzzle.count(BranchKind::TopK));
    }
  });
}

TEST(Puzzles, OutputIsSorted) {
  const auto all = enumerate_puzzles(w("01011"), w("11010"));
  for (std::size_t x = 1; x < all.size(); ++x) {
    EXPECT_TRUE(all[x - 1].lambda < all[x].lambda ||
                (all[x - 1].lambda == all[x].lambda && all[x - 1].puzzle < all[x].puzzle));
  }
}

TEST(Trace, WorkedExample) {
  const DegenerationNode root = trace(w("0101"), w("1010"));
  EXPECT_EQ(format_conditions(nontrivial_conditions(root.dots)), "(1,2) r<=1; (3,4) r<=1");
  const DegenerationNode& f = fork(root);
  ASSERT_EQ(f.children.size(), 4u);
  const auto* eq = child(f, BranchKind::Equivariant);
  const auto* s0 = child(f, BranchKind::ShiftZero);
  const auto* s1 = child(f, BranchKind::ShiftOne);
  const auto* tk = child(f, BranchKind::TopK);
  ASSERT_TRUE(eq && s0 && s1 && tk);
  EXPECT_EQ(eq->dots.str(), "1,2;2,4");
  EXPECT_EQ(format_conditions(nontrivial_conditions(eq->dots)), "(1,2) r<=1");
  EXPECT_EQ(format_conditions(nontrivial_conditions(s0->dots)), "(2,2) r<=0");
  EXPECT_EQ(format_conditions(nontrivial_conditions(s1->dots)), "(1,3) r<=1");
  EXPECT_EQ(format_conditions(nontrivial_conditions(tk->dots)), "(2,2) r<=0; (1,3) r<=1");
  // the top-K child forks once more, at 1 -> 2, into an equivariant and one shift
  const DegenerationNode& g = fork(*tk);
  ASSERT_EQ(g.children.size(), 2u);
  EXPECT_TRUE(child(g, BranchKind::Equivariant));
  EXPECT_TRUE(child(g, BranchKind::ShiftOne));
  EXPECT_EQ(g.via ? g.via->kind : BranchKind::Boring, BranchKind::Boring);
  EXPECT_EQ(trace_size(root), puzzle::testing::reachable(w("0101"), w("1010")).size());
}

TEST(Trace, GeometryDictionary) {
  puzzle::testing::for_all_pairs(5, [](const Word& mu, const Word& nu) {
    const auto bad = check_trace(trace(mu, nu));
    EXPECT_TRUE(bad.empty()) << mu.str() << " " << nu.str() << ": " << (bad.empty() ? "" : bad[0].message);
  });
}
