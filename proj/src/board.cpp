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

#include "puzzle/board.hpp"

#include <algorithm>

#include "puzzle/errors.hpp"

namespace puzzle {

char label_char(Label l) {
  switch (l) {
    case Label::Zero: return '0';
    case Label::One: return '1';
    case Label::R: return 'R';
    case Label::K: return 'K';
  }
  return '?';
}

Label label_from_bit(int bit) { return bit ? Label::One : Label::Zero; }

int column_i(const Step& s, int n) {
  (void)n;
  return s.dir == Dir::SE ? s.b + 1 : s.b;
}

int column_j(const Step& s, int n) { return s.b + n - s.a; }

std::string to_string(const FillPosition& f) {
  switch (f.kind) {
    case FillPosition::Kind::BottomTriangle: return "BottomTriangle(" + std::to_string(f.c) + ")";
    case FillPosition::Kind::Rhombus:
      return "Rhombus(" + std::to_string(f.i) + "," + std::to_string(f.j) + ")";
    case FillPosition::Kind::Done: return "Done";
  }
  return "?";
}

const char* to_string(BranchKind k) {
  switch (k) {
    case BranchKind::Boring: return "Boring";
    case BranchKind::Equivariant: return "Equivariant";
    case BranchKind::ShiftZero: return "ShiftZero";
    case BranchKind::ShiftOne: return "ShiftOne";
    case BranchKind::TopK: return "TopK";
  }
  return "?";
}

// ---------------------------------------------------------------------------

PuzzlePath::PuzzlePath(int n, int c, int m, std::vector<Label> labels)
    : n_(n), c_(c), m_(m), labels_(std::move(labels)) {
  if (n < 1) throw InputError("puzzle size must be positive");
  if (c < 0 || c > n) throw InputError("path column out of range");
  if (c == 0) {
    if (m != 0) throw InputError("final path has no kink offset");
    if (static_cast<int>(labels_.size()) != n) throw InputError("final path needs n labels");
  } else {
    if (m < 0 || m > n - c) throw InputError("kink offset out of range");
    if (static_cast<int>(labels_.size()) != n + c) throw InputError("path needs n+c labels");
  }
}

PuzzlePath PuzzlePath::initial(const Word& mu, const Word& nu) {
  const int n = mu.size();
  if (nu.size() != n) throw InputError("mu and nu have different lengths");
  if (n < 1) throw InputError("words must be nonempty");
  std::vector<Label> labels;
  for (int t = 1; t <= n; ++t) labels.push_back(label_from_bit(mu.bit(t)));
  for (int b = n; b >= 1; --b) labels.push_back(label_from_bit(nu.bit(b)));
  return PuzzlePath(n, n, 0, std::move(labels));
}

PuzzlePath PuzzlePath::final_path(const Word& lambda) {
  const int n = lambda.size();
  std::vector<Label> labels;
  // depth t carries lambda_{n+1-t}
  for (int t = 1; t <= n; ++t) labels.push_back(label_from_bit(lambda.bit(n + 1 - t)));
  return PuzzlePath(n, 0, 0, std::move(labels));
}

Label PuzzlePath::kink_label() const {
  if (is_final()) throw InvariantError("final path has no kink");
  return labels_[static_cast<std::size_t>(kink_index())];
}

std::vector<Step> PuzzlePath::steps() const {
  std::vector<Step> out;
  out.reserve(labels_.size());
  std::size_t x = 0;
  int a = 0;
  int b = 0;
  auto emit = [&](Dir d) {
    out.push_back({d, labels_[x++], a, b});
    switch (d) {
      case Dir::SE: ++a; ++b; break;
      case Dir::SW: ++a; break;
      case Dir::W: break;
    }
  };
  if (is_final()) {
    for (int t = 0; t < n_; ++t) emit(Dir::SW);
    return out;
  }
  for (int t = 0; t < c_ - 1; ++t) emit(Dir::SE);
  for (int t = 0; t < m_; ++t) emit(Dir::SW);
  emit(Dir::SE);
  for (int t = 0; t < n_ - c_ - m_; ++t) emit(Dir::SW);
  // along the bottom the step records the horizontal edge (n,b)
  for (int t = 0; t < c_; ++t) {
    out.push_back({Dir::W, labels_[x++], n_, b});
    --b;
  }
  return out;
}

std::vector<Label> PuzzlePath::ne_prefix() const {
  if (is_final()) return {};
  return {labels_.begin(), labels_.begin() + (c_ - 1)};
}

std::vector<Label> PuzzlePath::sw_run() const {
  if (is_final()) return labels_;
  const auto from = labels_.begin() + kink_index() + 1;
  return {from, from + (n_ - c_ - m_)};
}

std::vector<Label> PuzzlePath::bottom_suffix() const {
  if (is_final()) return {};
  return {labels_.end() - c_, labels_.end()};
}

Word PuzzlePath::final_word() const {
  if (!is_final()) throw InvariantError("final_word on a non-final path");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p) {
    const Label l = labels_[static_cast<std::size_t>(n_ - p)];
    if (l != Label::Zero && l != Label::One) throw InvariantError("final path carries a non-0/1 label");
    bits[static_cast<std::size_t>(p - 1)] = l == Label::One ? 1 : 0;
  }
  return Word(std::move(bits));
}

std::string PuzzlePath::str() const {
  std::string s = "c=" + std::to_string(c_) + " m=" + std::to_string(m_) + " |";
  const int kink = kink_index();
  int x = 0;
  for (const Step& st : steps()) {
    s += ' ';
    if (x == kink) s += '[';
    s += st.dir == Dir::SE ? '\\' : st.dir == Dir::SW ? '/' : '-';
    s += label_char(st.label);
    if (x == kink) s += ']';
    ++x;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Validity

namespace {

bool is_boundary(const Step& s) {
  switch (s.dir) {
    case Dir::SE: return s.a == s.b;
    case Dir::SW: return s.b == 0;
    case Dir::W: return true;
  }
  return false;
}

bool is(const Step& s, Dir d, Label l) { return s.dir == d && s.label == l; }

}  // namespace

std::vector<PathViolation> validate_path(const PuzzlePath& p) {
  std::vector<PathViolation> out;
  const std::vector<Step> st = p.steps();
  const int kink = p.kink_index();

  for (std::size_t x = 0; x < st.size(); ++x) {
    if (is_boundary(st[x]) && st[x].label != Label::Zero && st[x].label != Label::One) {
      out.push_back({1, "boundary edge " + std::to_string(x) + " carries " + label_char(st[x].label)});
      break;
    }
  }
  for (std::size_t x = 0; x < st.size(); ++x) {
    if (st[x].label == Label::K && static_cast<int>(x) != kink) {
      out.push_back({2, "K on non-kink edge " + std::to_string(x)});
      break;
    }
  }

  int leading_se = 0;
  while (leading_se < static_cast<int>(st.size()) && st[static_cast<std::size_t>(leading_se)].dir == Dir::SE) {
    ++leading_se;
  }
  {
    int se0 = 0;
    int w0 = 0;
    const int total = static_cast<int>(st.size());
    for (int t = 1; t <= leading_se; ++t) {
      if (st[static_cast<std::size_t>(t - 1)].label == Label::Zero) ++se0;
      if (is(st[static_cast<std::size_t>(total - t)], Dir::W, Label::Zero)) ++w0;
      if (se0 < w0) {
        out.push_back({3, "first " + std::to_string(t) + " SE steps carry fewer \\0 than the last " +
                              std::to_string(t) + " carry -0"});
        break;
      }
    }
  }

  {
    int se0 = 0;
    int swr = 0;
    int w0 = 0;
    for (const Step& s : st) {
      se0 += is(s, Dir::SE, Label::Zero);
      swr += is(s, Dir::SW, Label::R);
      w0 += is(s, Dir::W, Label::Zero);
    }
    if (se0 != swr + w0) {
      out.push_back({4, "#\\0 = " + std::to_string(se0) + " but #/R + #-0 = " + std::to_string(swr + w0)});
    }
  }

  if (kink < 0) return out;
  const Label kl = st[static_cast<std::size_t>(kink)].label;
  // first edge after the kink satisfying pred, or nullptr
  auto first_after = [&](std::size_t from, auto pred) -> const Step* {
    for (std::size_t x = from; x < st.size(); ++x) {
      if (pred(st[x])) return &st[x];
    }
    return nullptr;
  };
  const std::size_t after = static_cast<std::size_t>(kink) + 1;
  auto one_edge = [](const Step& s) { return is(s, Dir::SW, Label::One) || is(s, Dir::W, Label::One); };
  auto r_or_dash0 = [](const Step& s) { return is(s, Dir::SW, Label::R) || is(s, Dir::W, Label::Zero); };

  if (kl == Label::R || kl == Label::K) {
    const Step* f = first_after(after, [&](const Step& s) { return one_edge(s) || r_or_dash0(s); });
    if (f == nullptr || !one_edge(*f)) {
      out.push_back({5, "kink \\R/\\K not followed by /1 or -1 before /R or -0"});
    }
  }
  if (kl == Label::Zero || kl == Label::K) {
    const Step* f =
        first_after(after, [&](const Step& s) { return r_or_dash0(s) || is(s, Dir::W, Label::One); });
    if (f == nullptr || !r_or_dash0(*f)) {
      out.push_back({6, "kink \\0/\\K not followed by /R or -0 before -1"});
    }
  }
  if (kl == Label::K) {
    std::size_t x = after;
    while (x < st.size() && !is(st[x], Dir::SW, Label::One) && !r_or_dash0(st[x])) ++x;
    bool ok = x < st.size() && is(st[x], Dir::SW, Label::One);
    if (ok) {
      ++x;
      while (x < st.size() && !r_or_dash0(st[x]) && !is(st[x], Dir::W, Label::One)) ++x;
      ok = x < st.size() && r_or_dash0(st[x]);
    }
    if (!ok) out.push_back({7, "kink \\K not followed by /1, then /R or -0, then -1"});
  }
  return out;
}

FillPosition next_fill_position(const PuzzlePath& p) {
  FillPosition f;
  if (p.is_final()) return f;
  if (p.m() == p.n() - p.c()) {
    f.kind = FillPosition::Kind::BottomTriangle;
    f.c = p.c();
    return f;
  }
  f.kind = FillPosition::Kind::Rhombus;
  f.i = p.c();
  f.j = p.n() - p.m();
  return f;
}

// ---------------------------------------------------------------------------

Puzzle::Puzzle(int n)
    : n_(n),
      se_(static_cast<std::size_t>((n + 1) * (n + 1))),
      sw_(static_cast<std::size_t>((n + 1) * (n + 1))),
      hz_(static_cast<std::size_t>((n + 1) * (n + 1))),
      branch_(static_cast<std::size_t>((n + 1) * (n + 1))) {}

bool Puzzle::complete() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!branch(i, j)) return false;
    }
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b <= a; ++b) {
      if (!se(a, b) || !sw(a, b)) return false;
    }
  }
  for (int b = 1; b <= n_; ++b) {
    if (!hz(n_, b)) return false;
  }
  return true;
}

int Puzzle::count(BranchKind k) const {
  return static_cast<int>(std::count(branch_.begin(), branch_.end(), std::optional<BranchKind>(k)));
}

Boundary read_boundary(const Puzzle& pz) {
  if (!pz.complete()) throw InputError("puzzle is incomplete");
  const int n = pz.n();
  auto bit = [](std::optional<Label> l) -> std::uint8_t {
    if (l != Label::Zero && l != Label::One) throw InvariantError("boundary edge carries a non-0/1 label");
    return l == Label::One ? 1 : 0;
  };
  std::vector<std::uint8_t> lam(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> mu(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> nu(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) {
    mu[static_cast<std::size_t>(t - 1)] = bit(pz.se(t - 1, t - 1));
    lam[static_cast<std::size_t>(n - t)] = bit(pz.sw(t - 1, 0));
  }
  for (int b = 1; b <= n; ++b) nu[static_cast<std::size_t>(b - 1)] = bit(pz.hz(n, b));
  return {Word(std::move(lam)), Word(std::move(mu)), Word(std::move(nu))};
}

}  // namespace puzzle
