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

#include "puzzle/interval_rank.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "puzzle/errors.hpp"

namespace puzzle {

DotSet::DotSet(int n, const std::vector<Cell>& dots)
    : n_(n),
      col_of_row_(static_cast<std::size_t>(n + 2), 0),
      row_of_col_(static_cast<std::size_t>(n + 2), 0) {
  if (n < 0) throw InputError("board size must be nonnegative");
  for (const Cell& c : dots) {
    if (c.i < 1 || c.j > n || c.i > c.j) {
      throw InputError("dot (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                       ") is outside the upper triangle of a " + std::to_string(n) + "-board");
    }
    if (col_of_row_[static_cast<std::size_t>(c.i)] != 0) {
      throw InputError("two dots in row " + std::to_string(c.i));
    }
    if (row_of_col_[static_cast<std::size_t>(c.j)] != 0) {
      throw InputError("two dots in column " + std::to_string(c.j));
    }
    col_of_row_[static_cast<std::size_t>(c.i)] = c.j;
    row_of_col_[static_cast<std::size_t>(c.j)] = c.i;
  }
  for (int i = 1; i <= n; ++i) {
    if (col_of_row(i) != 0) dots_.push_back({i, col_of_row(i)});
  }
}

std::string DotSet::str() const {
  std::string s;
  for (const Cell& c : dots_) {
    if (!s.empty()) s += ';';
    s += std::to_string(c.i) + "," + std::to_string(c.j);
  }
  return s;
}

DotSet parse_dots(std::string_view s, int n) {
  std::string compact;
  for (char ch : s) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  std::vector<Cell> cells;
  if (compact.empty()) return DotSet(n, cells);
  std::stringstream ss(compact);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos) {
      throw InputError("malformed dot \"" + item + "\", expected i,j");
    }
    auto to_int = [&](const std::string& t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw InputError("malformed dot \"" + item + "\", expected i,j");
      }
      return std::stoi(t);
    };
    cells.push_back({to_int(item.substr(0, comma)), to_int(item.substr(comma + 1))});
  }
  if (compact.back() == ';') throw InputError("trailing ';' in dot list");
  return DotSet(n, cells);
}

// ---------------------------------------------------------------------------

IntervalRankMatrix::IntervalRankMatrix(int n)
    : n_(n), r_(static_cast<std::size_t>((n + 2) * (n + 2)), 0) {}

int IntervalRankMatrix::at(int i, int j) const {
  if (i > j || i < 1 || j > n_) return 0;
  return r_[static_cast<std::size_t>(i * (n_ + 2) + j)];
}

void IntervalRankMatrix::set(int i, int j, int v) {
  if (i < 1 || j > n_ || i > j) throw std::out_of_range("rank matrix cell outside the upper triangle");
  r_[static_cast<std::size_t>(i * (n_ + 2) + j)] = v;
}

std::vector<std::string> IntervalRankMatrix::violations() const {
  std::vector<std::string> out;
  auto cell = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  for (int i = 1; i <= n_; ++i) {
    if (at(i, i) != 0 && at(i, i) != 1) out.push_back("r" + cell(i, i) + " not in {0,1}");
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      const int west = at(i, j) - at(i, j - 1);
      const int south = at(i, j) - at(i + 1, j);
      if (west != 0 && west != 1) out.push_back("r" + cell(i, j) + " vs West neighbour");
      if (south != 0 && south != 1) out.push_back("r" + cell(i, j) + " vs South neighbour");
    }
  }
  // j = i-1 uses the empty interval, where r = 0
  for (int i = 2; i <= n_; ++i) {
    for (int j = i - 1; j < n_; ++j) {
      const int v = at(i, j);
      if (at(i - 1, j) == v && at(i, j + 1) == v && at(i - 1, j + 1) != v) {
        out.push_back("r" + cell(i - 1, j + 1) + " breaks the NE-corner rule");
      }
    }
  }
  return out;
}

bool IntervalRankMatrix::le(const IntervalRankMatrix& o) const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = i; j <= n_; ++j) {
      if (at(i, j) > o.at(i, j)) return false;
    }
  }
  return true;
}

IntervalRankMatrix rank_from_dots(const DotSet& d) {
  const int n = d.n();
  IntervalRankMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int inside = 0;
      for (const Cell& c : d.dots()) {
        if (i <= c.i && c.j <= j) ++inside;
      }
      r.set(i, j, (j - i + 1) - inside);
    }
  }
  return r;
}

DotSet dots_from_rank(const IntervalRankMatrix& r) {
  const int n = r.n();
  if (auto v = r.violations(); !v.empty()) {
    throw InputError("not an interval rank matrix: " + v.front());
  }
  // s_ij counts dots inside [i,j]; s = 0 on empty intervals.
  auto s = [&](int i, int j) { return i > j ? 0 : (j - i + 1) - r.at(i, j); };
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int x = s(i, j) - s(i, j - 1) - s(i + 1, j) + s(i + 1, j - 1);
      if (x == 1) {
        cells.push_back({i, j});
      } else if (x != 0) {
        throw InputError("rank matrix has a non-0/1 dot multiplicity at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      }
    }
  }
  DotSet d(n, cells);
  if (!(rank_from_dots(d) == r)) throw InputError("rank matrix is not realised by a dot set");
  return d;
}

// ---------------------------------------------------------------------------
// Ranks of column windows

namespace {

// Incremental row echelon basis over a field given by the element operations.
template <typename T, typename Ops>
class Echelon {
 public:
  Echelon(int dim, Ops ops) : dim_(dim), ops_(ops) {}

  // Returns true if v is independent of the current basis (and adds it).
  bool insert(std::vector<T> v) {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const int p = pivots_[b];
      if (!ops_.is_zero(v[static_cast<std::size_t>(p)])) {
        const T f = v[static_cast<std::size_t>(p)];
        for (int c = 0; c < dim_; ++c) {
          v[static_cast<std::size_t>(c)] =
              ops_.sub(v[static_cast<std::size_t>(c)], ops_.mul(f, basis_[b][static_cast<std::size_t>(c)]));
        }
      }
    }
    for (int c = 0; c < dim_; ++c) {
      if (!ops_.is_zero(v[static_cast<std::size_t>(c)])) {
        const T inv = ops_.inv(v[static_cast<std::size_t>(c)]);
        for (auto& x : v) x = ops_.mul(x, inv);
        basis_.push_back(std::move(v));
        pivots_.push_back(c);
        return true;
      }
    }
    return false;
  }

 private:
  int dim_;
  Ops ops_;
  std::vector<std::vector<T>> basis_;
  std::vector<int> pivots_;
};

struct ModOps {
  std::int64_t p;
  bool is_zero(std::int64_t x) const { return x == 0; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return ((a - b) % p + p) % p; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  }
};

using Rational = boost::multiprecision::cpp_rational;

struct RationalOps {
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational inv(const Rational& a) const { return Rational(1) / a; }
};

template <typename T, typename Ops, typename Conv>
IntervalRankMatrix window_ranks(const Matrix& m, Ops ops, Conv conv) {
  const int n = m.cols;
  IntervalRankMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    Echelon<T, Ops> e(m.rows, ops);
    int rank = 0;
    for (int j = i; j <= n; ++j) {
      std::vector<T> col(static_cast<std::size_t>(m.rows));
      for (int row = 0; row < m.rows; ++row) col[static_cast<std::size_t>(row)] = conv(m.at(row, j - 1));
      if (e.insert(std::move(col))) ++rank;
      r.set(i, j, rank);
    }
  }
  return r;
}

}  // namespace

IntervalRankMatrix rank_of_matrix(const Matrix& m, std::optional<int> p) {
  if (static_cast<int>(m.a.size()) != m.rows * m.cols) throw InputError("matrix shape mismatch");
  if (p) {
    if (*p < 2) throw InputError("field size must be a prime >= 2");
    const std::int64_t q = *p;
    return window_ranks<std::int64_t>(m, ModOps{q}, [q](std::int64_t x) { return ((x % q) + q) % q; });
  }
  return window_ranks<Rational>(m, RationalOps{}, [](std::int64_t x) { return Rational(x); });
}

// ---------------------------------------------------------------------------
// Essential set

std::vector<Cell> essential_set(const DotSet& d) {
  const int n = d.n();
  auto survives = [&](int i, int j) {
    if (i < 1 || j > n || i > j) return false;
    const int c = d.col_of_row(i);
    const int r = d.row_of_col(j);
    return c != 0 && r != 0 && j >= c && i <= r;
  };
  std::vector<Cell> out;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) {
      if (survives(i, j) && !survives(i - 1, j) && !survives(i, j + 1)) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<RankCondition> essential_conditions(const DotSet& d) {
  const IntervalRankMatrix r = rank_from_dots(d);
  std::vector<RankCondition> out;
  for (const Cell& c : essential_set(d)) out.push_back({c, r.at(c.i, c.j)});
  return out;
}

std::vector<RankCondition> nontrivial_conditions(const DotSet& d) {
  const int k = d.n() - d.size();
  std::vector<RankCondition> out;
  for (const RankCondition& rc : essential_conditions(d)) {
    if (rc.bound < std::min(k, rc.cell.j - rc.cell.i + 1)) out.push_back(rc);
  }
  return out;
}

std::string format_conditions(const std::vector<RankCondition>& conds) {
  std::string s;
  for (const RankCondition& rc : conds) {
    if (!s.empty()) s += "; ";
    s += "(" + std::to_string(rc.cell.i) + "," + std::to_string(rc.cell.j) + ") r<=" +
         std::to_string(rc.bound);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Covers

std::vector<DotSet> covers(const DotSet& d) {
  const int n = d.n();
  const auto& dots = d.dots();
  std::set<DotSet> out;

  for (std::size_t x = 0; x < dots.size(); ++x) {
    for (std::size_t y = 0; y < dots.size(); ++y) {
      const Cell nw = dots[x];
      const Cell se = dots[y];
      if (!(nw.i < se.i && nw.j < se.j) || se.i > nw.j) continue;
      const bool blocked = std::any_of(dots.begin(), dots.end(), [&](const Cell& o) {
        return o != nw && o != se && nw.i <= o.i && o.i <= se.i && nw.j <= o.j && o.j <= se.j;
      });
      if (blocked) continue;
      std::vector<Cell> next;
      for (const Cell& o : dots) {
        if (o != nw && o != se) next.push_back(o);
      }
      next.push_back({se.i, nw.j});
      next.push_back({nw.i, se.j});
      out.insert(DotSet(n, next));
    }
  }

  for (const Cell& c : dots) {
    auto moved = [&](Cell to) {
      std::vector<Cell> next;
      for (const Cell& o : dots) next.push_back(o == c ? to : o);
      out.insert(DotSet(n, next));
    };
    // left to the nearest empty column; the columns skipped hold dots South
    for (int y = c.j - 1; y >= c.i; --y) {
      const int r = d.row_of_col(y);
      if (r == 0) {
        moved({c.i, y});
        break;
      }
      if (r < c.i) break;
    }
    // down to the nearest empty row; the rows skipped hold dots West
    for (int x = c.i + 1; x <= c.j; ++x) {
      const int col = d.col_of_row(x);
      if (col == 0) {
        moved({x, c.j});
        break;
      }
      if (col > c.j) break;
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Fixed points

namespace {

void check_sizes(const DotSet& d, const Word& w) {
  if (w.size() != d.n()) throw InputError("word length differs from board size");
  if (d.size() != d.n() - w.ones()) {
    throw InputError("dot count " + std::to_string(d.size()) + " differs from n-k = " +
                     std::to_string(d.n() - w.ones()));
  }
}

}  // namespace

bool fixed_point_in(const DotSet& d, const Word& w) {
  check_sizes(d, w);
  const IntervalRankMatrix r = rank_from_dots(d);
  for (int i = 1; i <= d.n(); ++i) {
    int sum = 0;
    for (int j = i; j <= d.n(); ++j) {
      sum += w.bit(j);
      if (sum > r.at(i, j)) return false;
    }
  }
  return true;
}

bool matching_exists(const DotSet& d, const Word& w) {
  check_sizes(d, w);
  const auto& dots = d.dots();
  std::vector<int> owner(static_cast<std::size_t>(d.n() + 1), -1);  // position -> dot index
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t x,
                                                                    std::vector<bool>& seen) {
    for (int p = dots[x].i; p <= dots[x].j; ++p) {
      if (w.bit(p) != 0 || seen[static_cast<std::size_t>(p)]) continue;
      seen[static_cast<std::size_t>(p)] = true;
      const int o = owner[static_cast<std::size_t>(p)];
      if (o < 0 || augment(static_cast<std::size_t>(o), seen)) {
        owner[static_cast<std::size_t>(p)] = static_cast<int>(x);
        return true;
      }
    }
    return false;
  };
  for (std::size_t x = 0; x < dots.size(); ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(d.n() + 1), false);
    if (!augment(x, seen)) return false;
  }
  return true;
}

std::pair<Word, Word> envelope(const DotSet& d) {
  std::vector<std::uint8_t> lam(static_cast<std::size_t>(d.n()));
  std::vector<std::uint8_t> mu(static_cast<std::size_t>(d.n()));
  for (int p = 1; p <= d.n(); ++p) {
    lam[static_cast<std::size_t>(p - 1)] = d.col_of_row(p) == 0 ? 1 : 0;
    mu[static_cast<std::size_t>(p - 1)] = d.row_of_col(p) == 0 ? 1 : 0;
  }
  return {Word(std::move(lam)), Word(std::move(mu))};
}

int envelope_codim(const DotSet& d) {
  int count = 0;
  const auto& dots = d.dots();
  for (std::size_t x = 0; x < dots.size(); ++x) {
    for (std::size_t y = 0; y < dots.size(); ++y) {
      if (dots[x].i < dots[y].i && dots[x].j > dots[y].j) ++count;
    }
  }
  return count;
}

std::set<int> shift_basic(const std::set<int>& s, int i, int j) {
  if (i == j) throw InputError("shift needs two distinct columns");
  if (s.count(i) != 0 || s.count(j) == 0) return s;
  std::set<int> out = s;
  out.erase(j);
  out.insert(i);
  return out;
}

IntervalRankMatrix irm_min(const IntervalRankMatrix& a, const IntervalRankMatrix& b) {
  if (a.n() != b.n()) throw InputError("rank matrices of different sizes");
  IntervalRankMatrix out(a.n());
  for (int i = 1; i <= a.n(); ++i) {
    for (int j = i; j <= a.n(); ++j) out.set(i, j, std::min(a.at(i, j), b.at(i, j)));
  }
  if (auto v = out.violations(); !v.empty()) {
    throw InvariantError("entrywise minimum is not an interval rank matrix: " + v.front());
  }
  return out;
}

std::vector<DotSet> all_dotsets(int n, std::optional<int> size) {
  std::vector<DotSet> out;
  std::vector<Cell> cur;
  std::vector<bool> col_used(static_cast<std::size_t>(n + 1), false);
  std::function<void(int)> rec = [&](int row) {
    if (row > n) {
      if (!size || static_cast<int>(cur.size()) == *size) out.emplace_back(n, cur);
      return;
    }
    rec(row + 1);
    for (int j = row; j <= n; ++j) {
      if (col_used[static_cast<std::size_t>(j)]) continue;
      col_used[static_cast<std::size_t>(j)] = true;
      cur.push_back({row, j});
      rec(row + 1);
      cur.pop_back();
      col_used[static_cast<std::size_t>(j)] = false;
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace puzzle
