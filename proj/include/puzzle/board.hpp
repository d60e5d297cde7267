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
#include <tuple>
#include <vector>

#include "puzzle/word.hpp"

namespace puzzle {

enum class Label : std::uint8_t { Zero, One, R, K };

char label_char(Label l);
Label label_from_bit(int bit);

/// Edge direction as traversed by a path (or the edge orientation itself).
enum class Dir : std::uint8_t { SE, SW, W };

// Lattice: vertices v(a,b), 0 <= b <= a <= n, apex v(0,0), row a from the top.
//   SE edge from v(a,b) to v(a+1,b+1)   keeps NE/SW column i = b+1
//   SW edge from v(a,b) to v(a+1,b)     keeps NW/SE column j = b+n-a
//   horizontal edge (a,b) joins v(a,b-1), v(a,b); columns i = b, j = b+n-a

/// One edge of a path. (a,b) is the start vertex for SE/SW steps and the
/// horizontal edge coordinate for W steps.
struct Step {
  Dir dir;
  Label label;
  int a;
  int b;
};

/// NE/SW column of the edge (meaningful for SE and W steps).
int column_i(const Step& s, int n);
/// NW/SE column of the edge (meaningful for SW and W steps).
int column_j(const Step& s, int n);

struct FillPosition {
  enum class Kind { BottomTriangle, Rhombus, Done };
  Kind kind = Kind::Done;
  int c = 0;  // column of a bottom triangle
  int i = 0;  // rhombus position
  int j = 0;
  bool operator==(const FillPosition&) const = default;
};

std::string to_string(const FillPosition& f);

/// A labeled puzzle path in normal form. For 1 <= c <= n the steps are
///   (c-1) SE, m SW, the kink (SE), (n-c-m) SW, c W,
/// with 0 <= m <= n-c. c = 0 is the final path: n SW steps down the NW side.
class PuzzlePath {
 public:
  PuzzlePath() = default;
  /// Throws InputError if the label count or (c,m) is inconsistent.
  PuzzlePath(int n, int c, int m, std::vector<Label> labels);

  /// NE side mu (apex downward), bottom nu (left to right).
  static PuzzlePath initial(const Word& mu, const Word& nu);
  /// NW side lambda, read from the SW corner up to the apex.
  static PuzzlePath final_path(const Word& lambda);

  int n() const { return n_; }
  int c() const { return c_; }
  int m() const { return m_; }
  bool is_final() const { return c_ == 0; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Index of the kink in steps(), or -1 on the final path.
  int kink_index() const { return is_final() ? -1 : c_ - 1 + m_; }
  Label kink_label() const;

  /// The steps with their lattice coordinates, apex first.
  std::vector<Step> steps() const;

  /// Labels of the SE steps before the kink.
  std::vector<Label> ne_prefix() const;
  /// Labels of the SW steps after the kink (or of the whole final path).
  std::vector<Label> sw_run() const;
  /// Labels of the W steps, in traversal order (nu_c down to nu_1).
  std::vector<Label> bottom_suffix() const;

  /// The NW word of a final path.
  Word final_word() const;

  /// "c=2 m=1 | \0 /1 \1 /0 -1 -0" style dump.
  std::string str() const;

  bool operator==(const PuzzlePath&) const = default;
  auto operator<=>(const PuzzlePath&) const = default;

 private:
  int n_ = 0;
  int c_ = 0;
  int m_ = 0;
  std::vector<Label> labels_;
};

struct PathViolation {
  int rule;  // 1..7 in the order checked
  std::string message;
};

/// Empty when the labeling is allowed.
std::vector<PathViolation> validate_path(const PuzzlePath& p);

FillPosition next_fill_position(const PuzzlePath& p);

/// Filling moves. The order of the enumerators is the enumeration order.
enum class BranchKind : std::uint8_t { Boring, Equivariant, ShiftZero, ShiftOne, TopK };
constexpr int kBranchKinds = 5;
const char* to_string(BranchKind k);

/// Labels of every edge of the triangle plus the move used at each rhombus.
class Puzzle {
 public:
  Puzzle() = default;
  explicit Puzzle(int n);

  int n() const { return n_; }

  std::optional<Label> se(int a, int b) const { return se_[index(a, b)]; }
  std::optional<Label> sw(int a, int b) const { return sw_[index(a, b)]; }
  /// Horizontal edge (a,b), 1 <= b <= a <= n. Empty for edges inside a
  /// one-piece rhombus.
  std::optional<Label> hz(int a, int b) const { return hz_[index(a, b)]; }
  void set_se(int a, int b, Label l) { se_[index(a, b)] = l; }
  void set_sw(int a, int b, Label l) { sw_[index(a, b)] = l; }
  void set_hz(int a, int b, std::optional<Label> l) { hz_[index(a, b)] = l; }

  /// Move used at rhombus position (i,j), 1 <= i < j <= n.
  std::optional<BranchKind> branch(int i, int j) const { return branch_[index(i, j)]; }
  void set_branch(int i, int j, BranchKind k) { branch_[index(i, j)] = k; }

  /// True once all n bottom triangles and n(n-1)/2 rhombi are placed.
  bool complete() const;

  int count(BranchKind k) const;

  bool operator==(const Puzzle&) const = default;
  auto operator<=>(const Puzzle&) const = default;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a * (n_ + 1) + b); }

  int n_ = 0;
  std::vector<std::optional<Label>> se_;
  std::vector<std::optional<Label>> sw_;
  std::vector<std::optional<Label>> hz_;
  std::vector<std::optional<BranchKind>> branch_;
};

struct Boundary {
  Word lambda;
  Word mu;
  Word nu;
};

/// Reads lambda (NW, SW corner up to apex), mu (NE, apex down), nu (S, left
/// to right). Throws InputError on an incomplete puzzle.
Boundary read_boundary(const Puzzle& pz);

}  // namespace puzzle
