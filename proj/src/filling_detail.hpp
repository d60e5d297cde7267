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

// Shared pieces of the serial and OpenMP enumerators.

#include <map>

#include "puzzle/filling.hpp"

namespace puzzle::detail {

Poly poly_weight(Theory t, const Branch& b, int n, const WeightTable& table);
LPoly lpoly_weight(Theory t, const Branch& b, int n, const WeightTable& table);

template <typename P>
P weight_in(Theory t, const Branch& b, int n, const WeightTable& table) {
  if constexpr (std::is_same_v<P, Poly>) {
    return poly_weight(t, b, n, table);
  } else {
    return lpoly_weight(t, b, n, table);
  }
}

/// Throws InputError unless mu, nu have the same length and number of 1s.
void check_words(const Word& mu, const Word& nu);

/// Depth-first accumulation of acc * (weights below p) into out.
template <typename P>
void accumulate(Theory t, const PuzzlePath& p, const P& acc, const WeightTable& table,
                std::map<Word, P>& out) {
  if (p.is_final()) {
    auto [it, inserted] = out.try_emplace(p.final_word(), acc);
    if (!inserted) it->second += acc;
    return;
  }
  for (const Move& mv : legal_branches(p)) {
    const WeightTable::Entry e = table.get(t, mv.branch.kind);
    if (e == WeightTable::Entry{}) continue;
    if (e == WeightTable::Entry{1, 0}) {
      accumulate(t, mv.next, acc, table, out);
    } else {
      accumulate(t, mv.next, acc * weight_in<P>(t, mv.branch, p.n(), table), table, out);
    }
  }
}

template <typename P>
CoefficientMap to_coefficients(std::map<Word, P>&& raw) {
  CoefficientMap out;
  for (auto& [w, c] : raw) {
    if (!c.is_zero()) out.emplace(w, std::move(c));
  }
  return out;
}

}  // namespace puzzle::detail
