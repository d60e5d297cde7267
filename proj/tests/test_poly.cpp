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

#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "puzzle/errors.hpp"
#include "puzzle/poly.hpp"

using namespace puzzle;
using boost::multiprecision::cpp_rational;

namespace {

LPoly E(std::initializer_list<int> e, int c = 1) { return LPoly::monomial(static_cast<int>(e.size()), e, c); }

Integer eval(const Poly& p, const std::vector<int>& y) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer t = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      for (int r = 0; r < e[v]; ++r) t *= y[v];
    }
    total += t;
  }
  return total;
}

// The lowest-order term of sum c*exp(<e,y>) along the ray t*y is
// t^d/d! * sum c*<e,y>^d, once all lower moments vanish.
cpp_rational moment(const LPoly& p, const std::vector<int>& y, int m) {
  cpp_rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer dot = 0;
    for (std::size_t v = 0; v < e.size(); ++v) dot += Integer(e[v]) * y[v];
    Integer pw = 1;
    for (int r = 0; r < m; ++r) pw *= dot;
    total += cpp_rational(c * pw);
  }
  Integer fact = 1;
  for (int r = 2; r <= m; ++r) fact *= r;
  return total / cpp_rational(fact);
}

template <typename P>
P random_poly(std::mt19937& gen, int n, bool laurent) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> expo(laurent ? -2 : 0, 2);
  P p(n);
  const int t = terms(gen);
  for (int x = 0; x < t; ++x) {
    Exponent e(static_cast<std::size_t>(n));
    for (int& v : e) v = expo(gen);
    p.add_term(e, coef(gen));
  }
  return p;
}

}  // namespace

TEST(Poly, Arithmetic) {
  const LPoly a = E({0, 1, 0, -1});
  EXPECT_EQ((LPoly::constant(4, 1) - a) * a, a - E({0, 2, 0, -2}));
  const Poly d = y_var(4, 4) - y_var(4, 1);
  EXPECT_TRUE((d + (y_var(4, 1) - y_var(4, 4))).is_zero());
  EXPECT_EQ(E({0, 1, 0, -1}) * E({1, -1, 0, 0}), E({1, 0, 0, -1}));
  EXPECT_EQ(exp_root(4, 1, 4), E({1, 0, 0, -1}));
}

TEST(Poly, MismatchedVariableCountsThrow) {
  EXPECT_THROW(y_var(3, 1) + y_var(4, 1), std::invalid_argument);
}

TEST(Poly, NoZeroTermsStored) {
  Poly p = y_var(2, 1);
  p.add_term({1, 0}, -1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
  LPoly q = E({1, -1}, 2);
  q *= Integer(0);
  EXPECT_TRUE(q.is_zero());
}

TEST(Poly, Specializations) {
  EXPECT_EQ(eval_at_one(LPoly::constant(4, 1) - E({1, 0, 0, -1})), 0);
  EXPECT_EQ(eval_at_one(-E({1, 0, 0, -1})), -1);
  EXPECT_EQ(eval_at_one(E({0, 1, 0, -1})), 1);
  EXPECT_EQ(y_to_zero(y_var(4, 4) - y_var(4, 1)), 0);
  EXPECT_EQ(y_to_zero(Poly::constant(4, 1)), 1);
  EXPECT_EQ(y_to_zero(Poly::constant(2, 2) + y_var(2, 1) * y_var(2, 2)), 2);
}

TEST(Poly, LowestForm) {
  EXPECT_EQ(lowest_form(LPoly::constant(4, 1) - E({1, 0, 0, -1}), 1), y_var(4, 4) - y_var(4, 1));
  EXPECT_EQ(lowest_form(E({1, 0, 0, -1}), 0), Poly::constant(4, 1));
  EXPECT_EQ(lowest_form(-E({1, 0, 0, -1}), 0), Poly::constant(4, -1));
  // (1 - e^{y1-y2})(1 - e^{y2-y3}) starts in degree 2
  const LPoly one = LPoly::constant(3, 1);
  const LPoly sq = (one - E({1, -1, 0})) * (one - E({0, 1, -1}));
  EXPECT_EQ(lowest_form(sq, 2), (y_var(3, 2) - y_var(3, 1)) * (y_var(3, 3) - y_var(3, 2)));
  EXPECT_THROW(lowest_form(one, 1), InvariantError);
}

TEST(Poly, LowestFormMatchesMomentOracle) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> pick(-3, 3);
  const LPoly one = LPoly::constant(3, 1);
  const std::vector<LPoly> factors = {one - E({1, -1, 0}), one - E({0, 1, -1}), one - E({1, 0, -1}),
                                      E({1, 0, -1}) - E({0, 1, -1})};
  for (int trial = 0; trial < 200; ++trial) {
    LPoly p = random_poly<LPoly>(gen, 3, true);
    if (p.is_zero()) continue;
    int d = 0;
    for (int f = trial % 3; f > 0; --f) {
      p *= factors[static_cast<std::size_t>(pick(gen) + 3) % factors.size()];
      ++d;
    }
    std::vector<int> y = {pick(gen), pick(gen), pick(gen)};
    bool vanishes = true;
    for (int m = 0; m < d; ++m) {
      // lower moments vanish on every y exactly when the low components do
      for (int probe = 0; probe < 6 && vanishes; ++probe) {
        std::vector<int> z = {pick(gen), pick(gen), pick(gen)};
        vanishes = moment(p, z, m) == 0;
      }
    }
    if (!vanishes) continue;
    EXPECT_EQ(cpp_rational(eval(lowest_form(p, d), y)), moment(p, y, d)) << render(p);
  }
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly<LPoly>(gen, 3, true);
    const auto b = random_poly<LPoly>(gen, 3, true);
    const auto c = random_poly<LPoly>(gen, 3, true);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(eval_at_one(a * b), eval_at_one(a) * eval_at_one(b));
    const auto p = random_poly<Poly>(gen, 3, false);
    const auto q = random_poly<Poly>(gen, 3, false);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(y_to_zero(p * q), y_to_zero(p) * y_to_zero(q));
  }
}

TEST(Poly, LowestFormIsMultiplicative) {
  const LPoly one = LPoly::constant(4, 1);
  const LPoly a = one - E({1, 0, -1, 0});
  const LPoly b = E({0, 1, 0, -1}) * (one - E({0, 0, 1, -1}));
  const LPoly c = -E({1, -1, 0, 0});
  EXPECT_EQ(lowest_form(a * b, 2), lowest_form(a, 1) * lowest_form(b, 1));
  EXPECT_EQ(lowest_form(a * c, 1), lowest_form(a, 1) * lowest_form(c, 0));
}

TEST(Poly, Render) {
  EXPECT_EQ(render(y_var(4, 4) - y_var(4, 1)), "-1*y1 + 1*y4");
  EXPECT_EQ(render(-E({1, 0, 0, -1})), "-1*E(1,0,0,-1)");
  EXPECT_EQ(render(Poly(3)), "0");
  EXPECT_EQ(render(LPoly(3)), "0");
  EXPECT_EQ(render(Poly::constant(2, -1) * y_var(2, 1) * y_var(2, 2) * y_var(2, 2)), "-1*y1*y2^2");
  EXPECT_EQ(render(LPoly::constant(4, 1) - E({1, 0, 0, -1})), "-1*E(1,0,0,-1) + 1");
}

TEST(Poly, ParseRoundTrip) {
  std::mt19937 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly<Poly>(gen, 4, false);
    EXPECT_EQ(parse_poly(render(p), 4), p);
    EXPECT_EQ(render(parse_poly(render(p), 4)), render(p));
    const auto q = random_poly<LPoly>(gen, 4, true);
    EXPECT_EQ(parse_lpoly(render(q), 4), q);
  }
  EXPECT_THROW(parse_poly("1*z3", 4), InputError);
  EXPECT_THROW(parse_lpoly("1*E(1,0)", 4), InputError);
}

TEST(Poly, BigCoefficientsStayExact) {
  LPoly p = LPoly::constant(2, 1) + E({1, -1});
  LPoly acc = LPoly::constant(2, 1);
  for (int r = 0; r < 70; ++r) acc *= p;
  EXPECT_EQ(eval_at_one(acc), Integer(1) << 70);
}
