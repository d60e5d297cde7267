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

#include "puzzle/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "puzzle/errors.hpp"

namespace puzzle {

namespace detail {

bool GradedLexDesc::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

bool LexDesc::operator()(const Exponent& a, const Exponent& b) const {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

template <bool Laurent>
SparsePoly<Laurent> SparsePoly<Laurent>::constant(int n, const Integer& c) {
  SparsePoly p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
  return p;
}

template <bool Laurent>
SparsePoly<Laurent> SparsePoly<Laurent>::monomial(int n, Exponent e, const Integer& c) {
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent length != nvars");
  SparsePoly p(n);
  p.add_term(e, c);
  return p;
}

template <bool Laurent>
void SparsePoly<Laurent>::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length != nvars");
  if constexpr (!Laurent) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
      throw std::invalid_argument("negative exponent in a polynomial");
    }
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

template <bool Laurent>
void SparsePoly<Laurent>::check_same_n(const SparsePoly& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("polynomial variable counts differ: " + std::to_string(n_) +
                                " vs " + std::to_string(other.n_));
  }
}

template <bool Laurent>
SparsePoly<Laurent>& SparsePoly<Laurent>::operator+=(const SparsePoly& other) {
  check_same_n(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

template <bool Laurent>
SparsePoly<Laurent>& SparsePoly<Laurent>::operator-=(const SparsePoly& other) {
  check_same_n(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

template <bool Laurent>
SparsePoly<Laurent>& SparsePoly<Laurent>::operator*=(const SparsePoly& other) {
  check_same_n(other);
  SparsePoly out(n_);
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

template <bool Laurent>
SparsePoly<Laurent>& SparsePoly<Laurent>::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

template <bool Laurent>
SparsePoly<Laurent> SparsePoly<Laurent>::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, coef] : r.terms_) coef = -coef;
  return r;
}

template class SparsePoly<false>;
template class SparsePoly<true>;

Poly y_var(int n, int i) {
  Exponent e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  return Poly::monomial(n, std::move(e));
}

LPoly exp_root(int n, int i, int j) {
  Exponent e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i - 1)) += 1;
  e.at(static_cast<std::size_t>(j - 1)) -= 1;
  return LPoly::monomial(n, std::move(e));
}

Integer eval_at_one(const LPoly& p) {
  Integer s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

Integer y_to_zero(const Poly& p) {
  const Exponent zero(static_cast<std::size_t>(p.nvars()), 0);
  auto it = p.terms().find(zero);
  return it == p.terms().end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------
// Truncated series

TruncSeries::TruncSeries(int n, int cap) : n_(n), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("negative truncation degree");
}

TruncSeries TruncSeries::one(int n, int cap) {
  TruncSeries s(n, cap);
  s.add_term(Exponent(static_cast<std::size_t>(n), 0), 1);
  return s;
}

TruncSeries TruncSeries::one_plus_z_pow(int n, int cap, int i, int e) {
  TruncSeries s(n, cap);
  // generalized binomial coefficients C(e, m)
  Integer binom = 1;
  Exponent x(static_cast<std::size_t>(n), 0);
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) {
      binom *= (e - (m - 1));
      binom /= m;
    }
    if (binom == 0) break;
    x[static_cast<std::size_t>(i - 1)] = m;
    s.add_term(x, binom);
  }
  return s;
}

void TruncSeries::add_term(const Exponent& e, const Integer& c) {
  if (std::accumulate(e.begin(), e.end(), 0) > cap_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncSeries TruncSeries::operator*(const TruncSeries& other) const {
  TruncSeries out(n_, std::min(cap_, other.cap_));
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncSeries TruncSeries::scaled(const Integer& c) const {
  TruncSeries out(n_, cap_);
  for (const auto& [e, coef] : terms_) out.add_term(e, coef * c);
  return out;
}

Poly TruncSeries::component(int d) const {
  Poly p(n_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == d) p.add_term(e, c);
  }
  return p;
}

Poly lowest_form(const LPoly& p, int d) {
  if (d < 0) throw std::invalid_argument("lowest_form degree must be nonnegative");
  const int n = p.nvars();
  TruncSeries total(n, d);
  for (const auto& [e, c] : p.terms()) {
    TruncSeries term = TruncSeries::one(n, d);
    for (int v = 1; v <= n; ++v) {
      const int ev = e[static_cast<std::size_t>(v - 1)];
      if (ev != 0) term = term * TruncSeries::one_plus_z_pow(n, d, v, ev);
    }
    total += term.scaled(c);
  }
  for (int low = 0; low < d; ++low) {
    if (!total.component(low).is_zero()) {
      throw InvariantError("lowest_form: nonzero component of degree " + std::to_string(low) +
                           " below " + std::to_string(d) + " in " + render(p));
    }
  }
  return total.component(d);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

template <bool Laurent>
std::string render_impl(const SparsePoly<Laurent>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (is_const) continue;
    if constexpr (Laurent) {
      os << "*E(";
      for (std::size_t v = 0; v < e.size(); ++v) os << (v ? "," : "") << e[v];
      os << ")";
    } else {
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        os << "*y" << (v + 1);
        if (e[v] > 1) os << "^" << e[v];
      }
    }
  }
  return os.str();
}

std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  constexpr std::string_view sep = " + ";
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + sep.size();
  }
  return out;
}

int parse_int(std::string_view s) {
  if (s.empty()) throw InputError("empty integer in polynomial text");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(std::string(s), &used);
  } catch (const std::exception&) {
    throw InputError("bad integer \"" + std::string(s) + "\" in polynomial text");
  }
  if (used != s.size()) throw InputError("bad integer \"" + std::string(s) + "\"");
  return v;
}

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw InputError("missing coefficient in polynomial text");
  const std::size_t digits_from = (s[0] == '-') ? 1 : 0;
  if (digits_from == s.size() ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError("bad coefficient \"" + std::string(s) + "\"");
  }
  return Integer(std::string(s));
}

template <bool Laurent>
SparsePoly<Laurent> parse_impl(std::string_view s, int n) {
  SparsePoly<Laurent> p(n);
  if (s == "0") return p;
  for (std::string_view term : split_terms(s)) {
    const std::size_t star = term.find('*');
    const Integer c = parse_integer(term.substr(0, star));
    Exponent e(static_cast<std::size_t>(n), 0);
    if (star != std::string_view::npos) {
      std::string_view rest = term.substr(star + 1);
      if constexpr (Laurent) {
        if (rest.size() < 3 || rest.substr(0, 2) != "E(" || rest.back() != ')') {
          throw InputError("bad Laurent monomial \"" + std::string(rest) + "\"");
        }
        rest = rest.substr(2, rest.size() - 3);
        std::size_t v = 0;
        std::size_t start = 0;
        while (true) {
          const std::size_t comma = rest.find(',', start);
          if (v >= e.size()) throw InputError("too many exponents in \"" + std::string(term) + "\"");
          e[v++] = parse_int(rest.substr(start, comma == std::string_view::npos ? comma : comma - start));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
        if (v != e.size()) throw InputError("too few exponents in \"" + std::string(term) + "\"");
      } else {
        std::size_t start = 0;
        while (start <= rest.size()) {
          const std::size_t next = rest.find('*', start);
          std::string_view factor =
              rest.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start);
          if (factor.size() < 2 || factor[0] != 'y') {
            throw InputError("bad factor \"" + std::string(factor) + "\"");
          }
          const std::size_t caret = factor.find('^');
          const int var = parse_int(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1));
          const int pw = caret == std::string_view::npos ? 1 : parse_int(factor.substr(caret + 1));
          if (var < 1 || var > n || pw < 1) throw InputError("bad factor \"" + std::string(factor) + "\"");
          e[static_cast<std::size_t>(var - 1)] += pw;
          if (next == std::string_view::npos) break;
          start = next + 1;
        }
      }
    }
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

std::string render(const Poly& p) { return render_impl(p); }
std::string render(const LPoly& p) { return render_impl(p); }
Poly parse_poly(std::string_view s, int n) { return parse_impl<false>(s, n); }
LPoly parse_lpoly(std::string_view s, int n) { return parse_impl<true>(s, n); }

}  // namespace puzzle
