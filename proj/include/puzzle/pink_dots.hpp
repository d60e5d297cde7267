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

#include <string>
#include <vector>

#include "puzzle/board.hpp"
#include "puzzle/interval_rank.hpp"

namespace puzzle {

struct Ray {
  enum class Side { Left, Right };
  enum class Direction { SW, NW, SE, NE };

  Side side;
  Direction direction;
  /// Index of the source step along the path. Rays from bottom edges off
  /// the path get indices past the end of the path.
  int order;
  /// The preserved column: i for SW/NE rays, j for NW/SE rays.
  int coord;
  /// Source is the kink.
  bool from_kink = false;
  Label source_label = Label::Zero;

  bool operator==(const Ray&) const = default;
};

std::string to_string(const Ray& r);

/// Rays attached to a valid path. Throws InvariantError if the families do
/// not balance.
std::vector<Ray> place_rays(const PuzzlePath& p);

/// Pairs the rays into dots: kink rays first, then the remaining rays on
/// each side in column order. Throws InvariantError on an unpaired ray,
/// shared column, or a dot below the diagonal.
DotSet pair_dots(const std::vector<Ray>& rays, int n);

struct PathRank {
  DotSet dots;
  IntervalRankMatrix rank;
};

PathRank path_to_rank(const PuzzlePath& p);

/// Codimension of the path's variety in its Richardson envelope, counted
/// from /R above /0 pairs plus the kink corrections.
int path_codim(const PuzzlePath& p);

}  // namespace puzzle
