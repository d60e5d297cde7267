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

#include "puzzle/filling.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "filling_detail.hpp"
#include "puzzle/errors.hpp"
#include "puzzle/pink_dots.hpp"

namespace puzzle {

const char* to_string(Theory t) {
  switch (t) {
    case Theory::H: return "h";
    case Theory::HT: return "ht";
    case Theory::K: return "k";
    case Theory::KT: return "kt";
  }
  return "?";
}

Theory parse_theory(std::string_view s) {
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  for (Theory t : kTheories) {
    if (lower == to_string(t)) return t;
  }
  throw InputError("unknown theory \"" + std::string(s) + "\" (expected h, ht, k or kt)");
}

bool is_laurent(Theory t) { return t == Theory::K || t == Theory::KT; }

std::string to_string(const Branch& b) {
  std::string s = std::string(to_string(b.kind)) + " at " + to_string(b.pos) + " -> ";
  if (b.pos.kind == FillPosition::Kind::BottomTriangle) {
    s += "/";
    s += label_char(b.ul);
    return s;
  }
  s += "/";
  s += label_char(b.ul);
  s += " \\";
  s += label_char(b.ll);
  if (b.h) {
    s += " -";
    s += label_char(*b.h);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Piece catalog

namespace {

constexpr Label L0 = Label::Zero;
constexpr Label L1 = Label::One;
constexpr Label LR = Label::R;
constexpr Label LK = Label::K;

struct Rewrite {
  Label ul;
  Label ll;
  std::optional<Label> h;
};

// Right side (kink, next) other than (1,0): the unique left side.
std::optional<Rewrite> boring_rewrite(Label kink, Label next) {
  using P = std::pair<Label, Label>;
  const P key{kink, next};
  if (key == P{L1, L1}) return Rewrite{L1, L1, L1};
  if (key == P{L0, L0}) return Rewrite{L0, L0, L0};
  if (key == P{L0, L1}) return Rewrite{L1, L0, LR};
  if (key == P{L1, LR}) return Rewrite{LR, L1, L0};
  if (key == P{LR, L0}) return Rewrite{L0, LR, L1};
  if (key == P{L0, LR}) return Rewrite{L0, L1, L0};
  if (key == P{LR, L1}) return Rewrite{L0, L1, L1};
  if (key == P{LK, L0}) return Rewrite{L0, LK, std::nullopt};
  if (key == P{LK, L1}) return Rewrite{LR, L0, std::nullopt};
  return std::nullopt;
}

std::optional<Label> bottom_triangle(Label kink, Label bottom) {
  if (kink == L1 && bottom == L1) return L1;
  if (kink == L0 && bottom == L0) return L0;
  if (kink == LR && bottom == L1) return L0;
  if (kink == L1 && bottom == L0) return LR;
  return std::nullopt;
}

std::string pair_text(Label a, Label b) {
  return std::string("(\\") + label_char(a) + ", /" + label_char(b) + ")";
}

PuzzlePath replace_two(const PuzzlePath& p, int c, int m, std::initializer_list<Label> with) {
  const auto& old = p.labels();
  const auto k = static_cast<std::size_t>(p.kink_index());
  std::vector<Label> labels(old.begin(), old.begin() + static_cast<std::ptrdiff_t>(k));
  labels.insert(labels.end(), with);
  labels.insert(labels.end(), old.begin() + static_cast<std::ptrdiff_t>(k + 2), old.end());
  return PuzzlePath(p.n(), c, m, std::move(labels));
}

}  // namespace

std::vector<Move> legal_branches(const PuzzlePath& p) {
  const FillPosition pos = next_fill_position(p);
  if (pos.kind == FillPosition::Kind::Done) throw InvariantError("no move from a final path");
  const auto k = static_cast<std::size_t>(p.kink_index());
  const Label kink = p.labels()[k];
  const Label next = p.labels()[k + 1];
  std::vector<Move> out;

  if (pos.kind == FillPosition::Kind::BottomTriangle) {
    const auto nl = bottom_triangle(kink, next);
    if (!nl) throw InvariantError("no bottom triangle with kink " + std::string(1, label_char(kink)) +
                                  " over -" + label_char(next) + " on " + p.str());
    Branch b{BranchKind::Boring, pos, *nl, *nl, next};
    out.push_back({b, replace_two(p, p.c() - 1, 0, {*nl})});
    return out;
  }

  if (kink != L1 || next != L0) {
    const auto rw = boring_rewrite(kink, next);
    if (!rw) throw InvariantError("no rhombus with right side " + pair_text(kink, next) + " on " + p.str());
    Branch b{BranchKind::Boring, pos, rw->ul, rw->ll, rw->h};
    out.push_back({b, replace_two(p, p.c(), p.m() + 1, {rw->ul, rw->ll})});
    return out;
  }

  struct Candidate {
    BranchKind kind;
    Rewrite rw;
  };
  static const Candidate candidates[] = {
      {BranchKind::Equivariant, {L0, L1, std::nullopt}},
      {BranchKind::ShiftZero, {LR, L0, L0}},
      {BranchKind::ShiftOne, {L1, LR, L1}},
      {BranchKind::TopK, {L1, LK, std::nullopt}},
  };
  bool shift_zero = false;
  bool shift_one = false;
  for (const Candidate& cand : candidates) {
    PuzzlePath next_path = replace_two(p, p.c(), p.m() + 1, {cand.rw.ul, cand.rw.ll});
    const bool ok = validate_path(next_path).empty();
    if (cand.kind == BranchKind::Equivariant && !ok) {
      throw InvariantError("equivariant piece cannot be added to " + p.str());
    }
    if (!ok) continue;
    if (cand.kind == BranchKind::ShiftZero) shift_zero = true;
    if (cand.kind == BranchKind::ShiftOne) shift_one = true;
    if (cand.kind == BranchKind::TopK && !(shift_zero && shift_one)) {
      throw InvariantError("top K-piece fits without both shifts on " + p.str());
    }
    out.push_back({Branch{cand.kind, pos, cand.rw.ul, cand.rw.ll, cand.rw.h}, std::move(next_path)});
  }
  if (!shift_zero && !shift_one) throw InvariantError("neither shift fits on " + p.str());
  if (shift_zero && shift_one && out.back().branch.kind != BranchKind::TopK) {
    throw InvariantError("both shifts fit but the top K-piece does not on " + p.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weights

WeightTable WeightTable::standard() {
  WeightTable t;
  using B = BranchKind;
  for (Theory th : kTheories) t.set(th, B::Boring, {1, 0});
  t.set(Theory::H, B::ShiftZero, {1, 0});
  t.set(Theory::H, B::ShiftOne, {1, 0});
  t.set(Theory::HT, B::Equivariant, {0, 1});
  t.set(Theory::HT, B::ShiftZero, {1, 0});
  t.set(Theory::HT, B::ShiftOne, {1, 0});
  t.set(Theory::K, B::ShiftZero, {1, 0});
  t.set(Theory::K, B::ShiftOne, {1, 0});
  t.set(Theory::K, B::TopK, {-1, 0});
  t.set(Theory::KT, B::Equivariant, {1, -1});
  t.set(Theory::KT, B::ShiftZero, {0, 1});
  t.set(Theory::KT, B::ShiftOne, {0, 1});
  t.set(Theory::KT, B::TopK, {0, -1});
  return t;
}

WeightTable WeightTable::corrupted() {
  WeightTable t = standard();
  t.set(Theory::KT, BranchKind::TopK, {0, 1});
  return t;
}

std::string render(const Coefficient& c) {
  return std::visit([](const auto& p) { return render(p); }, c);
}

Coefficient zero_coefficient(Theory t, int n) {
  if (is_laurent(t)) return LPoly(n);
  return Poly(n);
}

namespace detail {

namespace {

void check_rhombus(const Branch& b, const WeightTable::Entry& e) {
  if (e.scaled != 0 && b.pos.kind != FillPosition::Kind::Rhombus) {
    throw InvariantError("position-dependent weight on a bottom triangle");
  }
}

}  // namespace

Poly poly_weight(Theory t, const Branch& b, int n, const WeightTable& table) {
  if (is_laurent(t)) throw InvariantError("polynomial weight requested for a K-theory");
  const WeightTable::Entry e = table.get(t, b.kind);
  check_rhombus(b, e);
  Poly w = Poly::constant(n, e.constant);
  if (e.scaled != 0) w += (y_var(n, b.pos.j) - y_var(n, b.pos.i)) * Integer(e.scaled);
  return w;
}

LPoly lpoly_weight(Theory t, const Branch& b, int n, const WeightTable& table) {
  if (!is_laurent(t)) throw InvariantError("Laurent weight requested for a cohomology theory");
  const WeightTable::Entry e = table.get(t, b.kind);
  check_rhombus(b, e);
  LPoly w = LPoly::constant(n, e.constant);
  if (e.scaled != 0) w += exp_root(n, b.pos.i, b.pos.j) * Integer(e.scaled);
  return w;
}

void check_words(const Word& mu, const Word& nu) {
  if (mu.size() != nu.size()) throw InputError("mu and nu have different lengths");
  if (mu.size() < 1) throw InputError("words must be nonempty");
  if (mu.ones() != nu.ones()) throw InputError("mu and nu have different numbers of 1s");
}

}  // namespace detail

Coefficient branch_weight(Theory t, const Branch& b, int n, const WeightTable& table) {
  if (is_laurent(t)) return detail::lpoly_weight(t, b, n, table);
  return detail::poly_weight(t, b, n, table);
}

// ---------------------------------------------------------------------------
// Structure constants

CoefficientMap structure_constants(Theory t, const Word& mu, const Word& nu, const WeightTable& table) {
  detail::check_words(mu, nu);
  const int n = mu.size();
  const PuzzlePath start = PuzzlePath::initial(mu, nu);
  if (!validate_path(start).empty()) return {};
  if (is_laurent(t)) {
    std::map<Word, LPoly> raw;
    detail::accumulate(t, start, LPoly::constant(n, 1), table, raw);
    return detail::to_coefficients(std::move(raw));
  }
  std::map<Word, Poly> raw;
  detail::accumulate(t, start, Poly::constant(n, 1), table, raw);
  return detail::to_coefficients(std::move(raw));
}

// ---------------------------------------------------------------------------
// Puzzles

namespace {

void record_initial(Puzzle& pz, const Word& mu, const Word& nu) {
  const int n = pz.n();
  for (int t = 1; t <= n; ++t) pz.set_se(t - 1, t - 1, label_from_bit(mu.bit(t)));
  for (int b = 1; b <= n; ++b) pz.set_hz(n, b, label_from_bit(nu.bit(b)));
}

void record_move(Puzzle& pz, const PuzzlePath& before, const Branch& b) {
  const int n = pz.n();
  const int c = before.c();
  const int m = before.m();
  if (b.pos.kind == FillPosition::Kind::BottomTriangle) {
    pz.set_sw(n - 1, c - 1, b.ul);
    return;
  }
  pz.set_sw(c - 1 + m, c - 1, b.ul);
  pz.set_se(c + m, c - 1, b.ll);
  pz.set_hz(c + m, c, b.h);
  pz.set_branch(b.pos.i, b.pos.j, b.kind);
}

}  // namespace

std::vector<PuzzleResult> enumerate_puzzles(const Word& mu, const Word& nu, const std::optional<Word>& lambda,
                                            Theory theory) {
  detail::check_words(mu, nu);
  if (lambda && (lambda->size() != mu.size() || lambda->ones() != mu.ones())) {
    throw InputError("lambda does not match mu in length and number of 1s");
  }
  const int n = mu.size();
  const WeightTable table = WeightTable::standard();
  std::vector<PuzzleResult> out;
  const PuzzlePath start = PuzzlePath::initial(mu, nu);
  if (!validate_path(start).empty()) return out;

  Puzzle pz(n);
  record_initial(pz, mu, nu);
  std::function<void(const PuzzlePath&, const Coefficient&)> walk = [&](const PuzzlePath& p,
                                                                       const Coefficient& acc) {
    if (p.is_final()) {
      Word lam = p.final_word();
      if (!lambda || *lambda == lam) out.push_back({pz, std::move(lam), acc});
      return;
    }
    for (const Move& mv : legal_branches(p)) {
      if (table.is_zero(theory, mv.branch.kind)) continue;
      const Puzzle saved = pz;
      record_move(pz, p, mv.branch);
      const Coefficient w = branch_weight(theory, mv.branch, n, table);
      Coefficient next = std::visit(
          [&](const auto& a) -> Coefficient {
            using P = std::decay_t<decltype(a)>;
            return a * std::get<P>(w);
          },
          acc);
      walk(mv.next, next);
      pz = saved;
    }
  };
  walk(start, is_laurent(theory) ? Coefficient(LPoly::constant(n, 1)) : Coefficient(Poly::constant(n, 1)));
  std::sort(out.begin(), out.end(), [](const PuzzleResult& a, const PuzzleResult& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.puzzle < b.puzzle;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Traces

namespace {

DegenerationNode make_node(const PuzzlePath& p, std::optional<Branch> via) {
  DegenerationNode node;
  node.path = p;
  PathRank pr = path_to_rank(p);
  node.dots = std::move(pr.dots);
  node.rank = std::move(pr.rank);
  node.essential = essential_conditions(node.dots);
  node.envelope = envelope(node.dots);
  node.envelope_codim = envelope_codim(node.dots);
  node.path_codim = path_codim(p);
  node.via = std::move(via);
  return node;
}

void grow(DegenerationNode& node) {
  if (node.path.is_final()) return;
  for (Move& mv : legal_branches(node.path)) {
    node.children.push_back(make_node(mv.next, mv.branch));
    grow(node.children.back());
  }
}

bool contains(const std::vector<DotSet>& v, const DotSet& d) {
  return std::find(v.begin(), v.end(), d) != v.end();
}

void check_node(const DegenerationNode& node, int k, std::vector<TraceFailure>& out) {
  auto fail = [&](const std::string& msg) { out.push_back({node.path.str(), msg}); };
  if (auto v = validate_path(node.path); !v.empty()) fail("path not allowed: " + v.front().message);
  if (node.dots.size() != node.path.n() - k) fail("dot count is not n-k");
  if (node.path_codim != node.envelope_codim) {
    fail("path codimension " + std::to_string(node.path_codim) + " but envelope codimension " +
         std::to_string(node.envelope_codim) + " for dots " + node.dots.str());
  }
  if (node.children.empty()) return;

  const DegenerationNode* by_kind[kBranchKinds] = {};
  for (const auto& ch : node.children) by_kind[static_cast<int>(ch.via->kind)] = &ch;
  const auto* boring = by_kind[static_cast<int>(BranchKind::Boring)];
  if (boring != nullptr) {
    if (node.children.size() != 1) fail("boring move is not unique");
    if (!(boring->dots == node.dots)) {
      fail("boring move changed the dots from " + node.dots.str() + " to " + boring->dots.str());
    }
    return;
  }
  const auto* eq = by_kind[static_cast<int>(BranchKind::Equivariant)];
  const auto* s0 = by_kind[static_cast<int>(BranchKind::ShiftZero)];
  const auto* s1 = by_kind[static_cast<int>(BranchKind::ShiftOne)];
  const auto* tk = by_kind[static_cast<int>(BranchKind::TopK)];
  if (eq == nullptr) return fail("no equivariant child");
  if (s0 == nullptr && s1 == nullptr) fail("no shift child");
  if ((tk != nullptr) != (s0 != nullptr && s1 != nullptr)) fail("top K child exists iff both shifts do: violated");
  const std::vector<DotSet> below_eq = covers(eq->dots);
  if (!contains(below_eq, node.dots)) fail("parent does not cover the equivariant child");
  if (s0 != nullptr && !contains(below_eq, s0->dots)) fail("ShiftZero child does not cover the equivariant child");
  if (s1 != nullptr && !contains(below_eq, s1->dots)) fail("ShiftOne child does not cover the equivariant child");
  if (tk != nullptr) {
    if (!contains(covers(s0->dots), tk->dots)) fail("top K child does not cover the ShiftZero child");
    if (!contains(covers(s1->dots), tk->dots)) fail("top K child does not cover the ShiftOne child");
    try {
      if (!(irm_min(s0->rank, s1->rank) == tk->rank)) fail("top K rank matrix is not the minimum of the shifts");
    } catch (const InvariantError& e) {
      fail(e.what());
    }
  }
}

void check_rec(const DegenerationNode& node, int k, std::vector<TraceFailure>& out) {
  check_node(node, k, out);
  for (const auto& ch : node.children) check_rec(ch, k, out);
}

}  // namespace

DegenerationNode trace(const Word& mu, const Word& nu) {
  detail::check_words(mu, nu);
  const PuzzlePath start = PuzzlePath::initial(mu, nu);
  DegenerationNode root;
  if (!validate_path(start).empty()) {
    root.path = start;
    return root;
  }
  root = make_node(start, std::nullopt);
  grow(root);
  return root;
}

std::vector<TraceFailure> check_trace(const DegenerationNode& root) {
  std::vector<TraceFailure> out;
  if (root.dots.n() == 0) return out;  // disallowed initial path, nothing traced
  const auto& labels = root.path.labels();
  const int k = static_cast<int>(std::count(labels.begin(), labels.begin() + root.path.n(), Label::One));
  check_rec(root, k, out);
  return out;
}

std::size_t trace_size(const DegenerationNode& root) {
  std::size_t s = 1;
  for (const auto& ch : root.children) s += trace_size(ch);
  return s;
}

}  // namespace puzzle
