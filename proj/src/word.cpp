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

#include "puzzle/word.hpp"

#include <algorithm>

namespace puzzle {

Word::Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw WordError(WordErrorKind::Alphabet, "word letters must be 0 or 1");
  }
}

Word Word::from_string(std::string_view s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw WordError(WordErrorKind::Alphabet,
                      "invalid letter '" + std::string(1, c) + "' in word \"" + std::string(s) + "\"");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(bits));
}

int Word::ones() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Word Word::reversed() const {
  std::vector<std::uint8_t> r(bits_.rbegin(), bits_.rend());
  return Word(std::move(r));
}

std::string Word::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Word validate_word(std::string_view s, int n, int k) {
  Word w = Word::from_string(s);
  if (w.size() != n) {
    throw WordError(WordErrorKind::Length, "word \"" + std::string(s) + "\" has length " +
                                               std::to_string(w.size()) + ", expected " +
                                               std::to_string(n));
  }
  if (w.ones() != k) {
    throw WordError(WordErrorKind::OneCount, "word \"" + std::string(s) + "\" has " +
                                                 std::to_string(w.ones()) + " ones, expected " +
                                                 std::to_string(k));
  }
  return w;
}

int inversions(const Word& w) {
  int count = 0;
  int ones_seen = 0;
  for (auto b : w.bits()) {
    if (b == 1) {
      ++ones_seen;
    } else {
      count += ones_seen;
    }
  }
  return count;
}

std::vector<int> word_to_partition(const Word& w) {
  std::vector<int> parts;
  int zeros_right = w.zeros();
  for (auto b : w.bits()) {
    if (b == 0) {
      --zeros_right;
    } else {
      parts.push_back(zeros_right);
    }
  }
  return parts;
}

std::vector<Word> all_words(int n, int k) {
  std::vector<Word> out;
  if (k < 0 || k > n) return out;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  for (int x = n - k; x < n; ++x) bits[static_cast<std::size_t>(x)] = 1;
  do {
    out.emplace_back(bits);
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

}  // namespace puzzle
