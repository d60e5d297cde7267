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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "puzzle/board.hpp"
#include "puzzle/interval_rank.hpp"
#include "puzzle/poly.hpp"

namespace puzzle {

enum class Theory : std::uint8_t { H, HT, K, KT };
constexpr std::array<Theory, 4> kTheories = {Theory::H, Theory::HT, Theory::K, Theory::KT};

const char* to_string(Theory t);
/// Accepts h, ht, k, kt (any case). Throws InputError otherwise.
Theory parse_theory(std::string_view s);
/// K and KT coefficients live in the Laurent ring.
bool is_laurent(Theory t);

/// One filling move: the piece(s) added at `pos` and the new left-side
/// labels. For a bottom triangle only `ul` (the new / edge) is used.
struct Branch {
  BranchKind kind = BranchKind::Boring;
  FillPosition pos;
  Label ul = Label::Zero;
  Label ll = Label::Zero;
  std::optional<Label> h;

  bool operator==(const Branch&) const = default;
};

std::string to_string(const Branch& b);

struct Move {
  Branch branch;
  PuzzlePath next;
};

/// Every allowed one-step addition, in BranchKind order. Throws
/// InvariantError on a final path or an impossible label combination.
std::vector<Move> legal_branches(const PuzzlePath& p);

/// Per theory and move kind, a weight constant + scaled * x where
/// x = y_j - y_i (H, HT) or x = exp(y_i - y_j) (K, KT).
class WeightTable {
 public:
  struct Entry {
    int constant = 0;
    int scaled = 0;
    bool operator==(const Entry&) const = default;
  };

  static WeightTable standard();
  /// The standard table with the KT top-K sign flipped; a negative control
  /// for the verification suite.
  static WeightTable corrupted();

  Entry get(Theory t, BranchKind k) const {
    return table_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
  }
  void set(Theory t, BranchKind k, Entry e) {
    table_[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = e;
  }
  bool is_zero(Theory t, BranchKind k) const { return get(t, k) == Entry{}; }

 private:
  std::array<std::array<Entry, kBranchKinds>, 4> table_{};
};

using Coefficient = std::variant<Poly, LPoly>;
using CoefficientMap = std::map<Word, Coefficient>;

std::string render(const Coefficient& c);
Coefficient zero_coefficient(Theory t, int n);

/// Weight of one move on an n-board.
Coefficient branch_weight(Theory t, const Branch& b, int n,
                          const WeightTable& table = WeightTable::standard());

/// Nonzero structure constants keyed by the NW word, by depth-first
/// enumeration with zero-weight moves pruned. Empty if the initial path is
/// not allowed. Throws InputError if mu and nu do not match in n and k.
CoefficientMap structure_constants(Theory t, const Word& mu, const Word& nu,
                                   const WeightTable& table = WeightTable::standard());

/// Same result as structure_constants, with the search tree split across
/// OpenMP threads (threads <= 0 keeps the runtime default).
CoefficientMap structure_constants_parallel(Theory t, const Word& mu, const Word& nu, int threads = 0,
                                            const WeightTable& table = WeightTable::standard());

struct TableEntry {
  Word mu;
  Word nu;
  CoefficientMap coefficients;
};

/// structure_constants for every (mu, nu) with n letters and k ones, in
/// lexicographic order, computed in parallel over pairs.
std::vector<TableEntry> structure_table(Theory t, int n, int k, int threads = 0,
                                        const WeightTable& table = WeightTable::standard());

struct PuzzleResult {
  Puzzle puzzle;
  Word lambda;
  /// Product of the move weights in the requested theory.
  Coefficient weight;
};

/// Completed puzzles with NE side mu and S side nu, optionally only those
/// with NW side lambda; moves of zero weight in `theory` are skipped.
/// Sorted by (lambda, puzzle).
std::vector<PuzzleResult> enumerate_puzzles(const Word& mu, const Word& nu,
                                            const std::optional<Word>& lambda = std::nullopt,
                                            Theory theory = Theory::KT);

struct DegenerationNode {
  PuzzlePath path;
  DotSet dots;
  IntervalRankMatrix rank;
  std::vector<RankCondition> essential;
  std::pair<Word, Word> envelope;
  int envelope_codim = 0;
  int path_codim = 0;
  /// Move from the parent; empty at the root.
  std::optional<Branch> via;
  std::vector<DegenerationNode> children;
};

/// The full move tree (nothing pruned) annotated with the rank data of
/// every path. Throws InputError on mismatched words; the root has no
/// children when the initial path is not allowed.
DegenerationNode trace(const Word& mu, const Word& nu);

struct TraceFailure {
  std::string path;
  std::string message;
};

/// Checks along a trace: unchanged dots across boring moves and bottom
/// triangles, the cover pattern at each 1-over-0 step (parent and both
/// shifts cover the equivariant child, the top-K child covers both shifts
/// and its rank matrix is their entrywise minimum), the shift/top-K
/// existence rule, and path_codim = envelope_codim at every node.
std::vector<TraceFailure> check_trace(const DegenerationNode& root);

/// Number of nodes in a trace.
std::size_t trace_size(const DegenerationNode& root);

}  // namespace puzzle
