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
#include <vector>

#include "puzzle/word.hpp"

namespace puzzle {

/// Littlewood-Richardson coefficient c^{outer}_{inner, content}: the
/// number of semistandard fillings of outer/inner with the given content
/// whose reverse reading word is a lattice word. Partitions are weakly
/// decreasing; trailing zeros are ignored.
std::int64_t lr_coefficient(const std::vector<int>& outer, const std::vector<int>& inner,
                            const std::vector<int>& content);

/// c^{P(nu)}_{P(lambda), P(mu)} with P = word_to_partition; 0 unless
/// |lambda| + |mu| = |nu|. Equals the number of H puzzles with NW side
/// lambda, NE side mu and S side nu.
std::int64_t lr_oracle(const Word& lambda, const Word& mu, const Word& nu);

}  // namespace puzzle
