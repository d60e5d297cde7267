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

#include "puzzle/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace puzzle {

namespace {

std::vector<int> trimmed(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Fills the skew shape cell by cell in reverse reading order (rows top to
// bottom, each row right to left), so the lattice condition can be checked
// on the prefix read so far.
class LrCounter {
 public:
  LrCounter(std::vector<int> outer, std::vector<int> inner, std::vector<int> content)
      : outer_(std::move(outer)), inner_(std::move(inner)), content_(std::move(content)) {
    inner_.resize(outer_.size(), 0);
    for (std::size_t r = 0; r < outer_.size(); ++r) {
      grid_.emplace_back(static_cast<std::size_t>(outer_[r]), 0);
    }
    used_.assign(content_.size() + 1, 0);
  }

  std::int64_t count() { return fill(0, outer_.empty() ? 0 : outer_[0] - 1); }

 private:
  std::int64_t fill(std::size_t row, int col) {
    while (row < outer_.size() && col < inner_[row]) {
      ++row;
      if (row < outer_.size()) col = outer_[row] - 1;
    }
    if (row == outer_.size()) return 1;

    const int nvals = static_cast<int>(content_.size());
    int hi = nvals;
    if (col + 1 < outer_[row]) hi = std::min(hi, at(row, col + 1));
    int lo = 1;
    if (row > 0 && col < outer_[row - 1] && col >= inner_[row - 1]) lo = at(row - 1, col) + 1;

    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used_[vi] == content_[vi - 1]) continue;
      if (v > 1 && used_[vi] + 1 > used_[vi - 1]) continue;
      ++used_[vi];
      at(row, col) = v;
      total += fill(row, col - 1);
      --used_[vi];
    }
    at(row, col) = 0;
    return total;
  }

  int& at(std::size_t row, int col) { return grid_[row][static_cast<std::size_t>(col)]; }

  std::vector<int> outer_;
  std::vector<int> inner_;
  std::vector<int> content_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> used_;
};

int size_of(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace

std::int64_t lr_coefficient(const std::vector<int>& outer, const std::vector<int>& inner,
                            const std::vector<int>& content) {
  std::vector<int> o = trimmed(outer);
  std::vector<int> i = trimmed(inner);
  std::vector<int> c = trimmed(content);
  if (size_of(o) != size_of(i) + size_of(c) || i.size() > o.size()) return 0;
  for (std::size_t r = 0; r < i.size(); ++r) {
    if (i[r] > o[r]) return 0;
  }
  return LrCounter(std::move(o), std::move(i), std::move(c)).count();
}

std::int64_t lr_oracle(const Word& lambda, const Word& mu, const Word& nu) {
  if (inversions(lambda) + inversions(mu) != inversions(nu)) return 0;
  return lr_coefficient(word_to_partition(nu), word_to_partition(lambda), word_to_partition(mu));
}

}  // namespace puzzle
