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
#include <string>
#include <string_view>
#include <vector>

#include "puzzle/errors.hpp"

namespace puzzle {

/// A binary word of length n. Positions are 1-based, as on the puzzle
/// boundary: bit(1) is the leftmost letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> bits);

  /// Parses a 0/1 string without constraining n or k.
  static Word from_string(std::string_view s);

  int size() const { return static_cast<int>(bits_.size()); }
  int ones() const;
  int zeros() const { return size() - ones(); }
  int bit(int pos) const { return bits_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  Word reversed() const;
  std::string str() const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class WordErrorKind { Alphabet, Length, OneCount };

class WordError : public InputError {
 public:
  WordError(WordErrorKind kind, const std::string& what)
      : InputError(what), kind_(kind) {}
  WordErrorKind kind() const { return kind_; }

 private:
  WordErrorKind kind_;
};

/// Checks alphabet, then length, then the number of 1s; throws WordError.
Word validate_word(std::string_view s, int n, int k);

/// #{(i,j) : i < j, w_i = 1, w_j = 0}.
int inversions(const Word& w);

/// The a-th part is the number of 0s strictly right of the a-th 1.
std::vector<int> word_to_partition(const Word& w);

/// All words with n letters and k ones, in lexicographic order.
std::vector<Word> all_words(int n, int k);

}  // namespace puzzle
