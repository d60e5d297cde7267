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

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "puzzle/word.hpp"

namespace puzzle {

/// A cell (i,j) of the upper-triangular n x n board, 1-based.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Upper-triangular partial permutation: at most one dot per row and per
/// column, every dot with i <= j.
class DotSet {
 public:
  DotSet() = default;
  /// Throws InputError on out-of-range cells, i > j, or a shared row/column.
  DotSet(int n, const std::vector<Cell>& dots);

  int n() const { return n_; }
  int size() const { return static_cast<int>(dots_.size()); }
  /// Dots sorted by row.
  const std::vector<Cell>& dots() const { return dots_; }
  /// Column of the dot in row i, or 0.
  int col_of_row(int i) const { return col_of_row_[static_cast<std::size_t>(i)]; }
  /// Row of the dot in column j, or 0.
  int row_of_col(int j) const { return row_of_col_[static_cast<std::size_t>(j)]; }
  bool contains(Cell c) const { return c.i >= 1 && c.i <= n_ && col_of_row(c.i) == c.j; }

  /// "i1,j1;i2,j2;..." sorted by row; empty set prints as "".
  std::string str() const;

  bool operator==(const DotSet& o) const { return n_ == o.n_ && dots_ == o.dots_; }
  auto operator<=>(const DotSet& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return dots_ <=> o.dots_;
  }

 private:
  int n_ = 0;
  std::vector<Cell> dots_;
  std::vector<int> col_of_row_;
  std::vector<int> row_of_col_;
};

/// Parses "i,j;i,j;..." (whitespace tolerated, empty string = no dots).
DotSet parse_dots(std::string_view s, int n);

/// Upper-triangular array r_ij, i <= j, with r_ij = 0 read for i > j.
class IntervalRankMatrix {
 public:
  IntervalRankMatrix() = default;
  explicit IntervalRankMatrix(int n);

  int n() const { return n_; }
  int at(int i, int j) const;
  void set(int i, int j, int v);

  /// Empty when the three structural properties hold, else one message per
  /// violation.
  std::vector<std::string> violations() const;
  bool valid() const { return violations().empty(); }

  /// Entrywise a <= b.
  bool le(const IntervalRankMatrix& o) const;

  bool operator==(const IntervalRankMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> r_;  // (n+2) x (n+2), row-major
};

/// r_ij = (j-i+1) - #{dots (a,b) : i <= a <= b <= j}.
IntervalRankMatrix rank_from_dots(const DotSet& d);

/// Inverse of rank_from_dots. Throws InputError if r is not an interval
/// rank matrix.
DotSet dots_from_rank(const IntervalRankMatrix& r);

/// Dense k x n integer matrix, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;
  std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r * cols + c)]; }
};

/// Ranks of all column windows [i,j], over the rationals, or over the field
/// with p elements when p is given (p must be prime).
IntervalRankMatrix rank_of_matrix(const Matrix& m, std::optional<int> p = std::nullopt);

/// Northeast corners of the strict South/West diagram, sorted by (j, i).
std::vector<Cell> essential_set(const DotSet& d);

struct RankCondition {
  Cell cell;
  int bound = 0;  // r_ij <= bound
  auto operator<=>(const RankCondition&) const = default;
};

/// The essential cells with their bounds, sorted by (j, i).
std::vector<RankCondition> essential_conditions(const DotSet& d);

/// As essential_conditions, minus bounds r_ij <= b with b >= min(k, j-i+1),
/// k = n - |d|, which hold for every k-plane.
std::vector<RankCondition> nontrivial_conditions(const DotSet& d);

/// "(3,3) r<=0; (1,5) r<=3".
std::string format_conditions(const std::vector<RankCondition>& conds);

/// Rectangle swaps and one-step moves into empty columns/rows that lower the
/// rank matrix by a covering step. Sorted, no duplicates.
std::vector<DotSet> covers(const DotSet& d);

/// True iff sum_{m in [i,j]} w_m <= r_ij for all i <= j.
bool fixed_point_in(const DotSet& d, const Word& w);

/// True iff the dots can be matched injectively to 0-positions of w with
/// each dot (i,j) sent into [i,j].
bool matching_exists(const DotSet& d, const Word& w);

/// (lambda, mu): lambda has 1s in dotless rows, mu in dotless columns.
std::pair<Word, Word> envelope(const DotSet& d);

/// Number of dot pairs arranged NE/SW.
int envelope_codim(const DotSet& d);

/// Shift of a column set along i <- j: S unless i not in S and j in S, in
/// which case j is replaced by i.
std::set<int> shift_basic(const std::set<int>& s, int i, int j);

/// Entrywise minimum. Throws InvariantError if the result is not an interval
/// rank matrix.
IntervalRankMatrix irm_min(const IntervalRankMatrix& a, const IntervalRankMatrix& b);

/// Every DotSet on an n-board, optionally restricted to a given size, in
/// increasing order.
std::vector<DotSet> all_dotsets(int n, std::optional<int> size = std::nullopt);

}  // namespace puzzle
