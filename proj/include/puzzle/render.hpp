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

#include "puzzle/board.hpp"

namespace puzzle {

/// One text row per triangle row. Each upward unit triangle prints as
/// "/x_y\z": x its SW-side label, y its bottom label, z its SE-side label;
/// '.' marks an edge the puzzle does not carry (inside a one-piece
/// rhombus) or has not reached yet.
std::string render_ascii(const Puzzle& pz);

/// Standalone SVG. Equivariant rhombi, the two shifts and the top K piece
/// are each filled in their own color; triangle-only pieces stay pale.
std::string render_svg(const Puzzle& pz, const std::string& title = "");

/// "puzzle-<mu>-<nu>-<lambda>-<index>.svg", index zero-padded to 3 digits.
std::string svg_filename(const Boundary& b, int index);

}  // namespace puzzle
