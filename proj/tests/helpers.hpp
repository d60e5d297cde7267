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

#include <functional>
#include <optional>
#include <vector>

#include "puzzle/filling.hpp"

namespace puzzle::testing {

inline Word w(const char* s) { return Word::from_string(s); }

/// Follows the unique (first) move until the next position is `pos`.
inline PuzzlePath advance_to(PuzzlePath p, FillPosition::Kind kind, int i, int j) {
  while (!p.is_final()) {
    const FillPosition f = next_fill_position(p);
    if (f.kind == kind && f.i == i && f.j == j) return p;
    p = legal_branches(p).front().next;
  }
  return p;
}

inline std::optional<Move> move_of(const PuzzlePath& p, BranchKind k) {
  for (const Move& m : legal_branches(p)) {
    if (m.branch.kind == k) return m;
  }
  return std::nullopt;
}

/// Every path reachable from the initial path of (mu, nu).
inline std::vector<PuzzlePath> reachable(const Word& mu, const Word& nu) {
  std::vector<PuzzlePath> out;
  const PuzzlePath start = PuzzlePath::initial(mu, nu);
  if (!validate_path(start).empty()) return out;
  std::function<void(const PuzzlePath&)> go = [&](const PuzzlePath& p) {
    out.push_back(p);
    if (p.is_final()) return;
    for (const Move& m : legal_branches(p)) go(m.next);
  };
  go(start);
  return out;
}

template <typename F>
void for_all_pairs(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto ws = all_words(n, k);
      for (const Word& mu : ws) {
        for (const Word& nu : ws) f(mu, nu);
      }
    }
  }
}

}  // namespace puzzle::testing
