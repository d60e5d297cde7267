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

#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace puzzle {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

namespace detail {

// Both orders sort "larger" monomials first, so rendering reads
// y1 before y4 and high degree before low.
struct GradedLexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};
struct LexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

}  // namespace detail

/// Sparse polynomial with arbitrary-precision integer coefficients in n
/// variables. With Laurent = false the exponents are nonnegative and the
/// variables are y_1..y_n; with Laurent = true the exponent vector e stands
/// for exp(e_1 y_1 + ... + e_n y_n) and may be negative.
/// Zero coefficients are never stored.
template <bool Laurent>
class SparsePoly {
 public:
  using Order = std::conditional_t<Laurent, detail::LexDesc, detail::GradedLexDesc>;
  using TermMap = std::map<Exponent, Integer, Order>;

  SparsePoly() = default;
  explicit SparsePoly(int n) : n_(n) {}

  static SparsePoly constant(int n, const Integer& c);
  static SparsePoly monomial(int n, Exponent e, const Integer& c = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * x^e in place, keeping the no-zero-coefficient invariant.
  void add_term(const Exponent& e, const Integer& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly& operator*=(const Integer& c);
  SparsePoly operator-() const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    r *= b;
    return r;
  }
  friend SparsePoly operator*(SparsePoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_n(const SparsePoly& other) const;

  int n_ = 0;
  TermMap terms_;
};

using Poly = SparsePoly<false>;
using LPoly = SparsePoly<true>;

extern template class SparsePoly<false>;
extern template class SparsePoly<true>;

/// The variable y_i (1-based) in Z[y_1..y_n].
Poly y_var(int n, int i);
/// exp(y_i - y_j) as a Laurent monomial.
LPoly exp_root(int n, int i, int j);

/// Sum of coefficients (exp(y) -> 1).
Integer eval_at_one(const LPoly& p);
/// Constant term (y -> 0).
Integer y_to_zero(const Poly& p);
/// Lowest-order form: substitute exp(y_i) = 1 + z_i, expand to total degree
/// d, require every component below degree d to vanish, and return the
/// degree-d component with z renamed to y. Throws InvariantError if a
/// lower component survives.
Poly lowest_form(const LPoly& p, int d);

std::string render(const Poly& p);
std::string render(const LPoly& p);
Poly parse_poly(std::string_view s, int n);
LPoly parse_lpoly(std::string_view s, int n);

/// Power series in z_1..z_n truncated above total degree `cap`.
class TruncSeries {
 public:
  TruncSeries(int n, int cap);

  static TruncSeries one(int n, int cap);
  /// (1 + z_i)^e, with the geometric expansion when e < 0.
  static TruncSeries one_plus_z_pow(int n, int cap, int i, int e);

  int nvars() const { return n_; }
  int cap() const { return cap_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }

  void add_term(const Exponent& e, const Integer& c);
  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries operator*(const TruncSeries& other) const;
  TruncSeries scaled(const Integer& c) const;

  /// The homogeneous component of total degree d, as a polynomial in y.
  Poly component(int d) const;

 private:
  int n_;
  int cap_;
  std::map<Exponent, Integer> terms_;
};

}  // namespace puzzle
