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

#include "puzzle/pink_dots.hpp"

#include <algorithm>

#include "puzzle/errors.hpp"

namespace puzzle {

std::string to_string(const Ray& r) {
  static const char* const dirs[] = {"SW", "NW", "SE", "NE"};
  std::string s = r.side == Ray::Side::Left ? "L " : "R ";
  s += dirs[static_cast<int>(r.direction)];
  const bool keeps_i = r.direction == Ray::Direction::SW || r.direction == Ray::Direction::NE;
  s += keeps_i ? " i=" : " j=";
  s += std::to_string(r.coord);
  s += " from #" + std::to_string(r.order);
  if (r.from_kink) s += " (kink)";
  return s;
}

std::vector<Ray> place_rays(const PuzzlePath& p) {
  const int n = p.n();
  const std::vector<Step> st = p.steps();
  const int kink = p.kink_index();
  std::vector<Ray> rays;
  using S = Ray::Side;
  using D = Ray::Direction;

  const Label kl = kink >= 0 ? st[static_cast<std::size_t>(kink)].label : Label::Zero;
  bool want_special_one = kink >= 0 && (kl == Label::R || kl == Label::K);
  bool zero_above_kink = false;

  for (int x = 0; x < static_cast<int>(st.size()); ++x) {
    const Step& s = st[static_cast<std::size_t>(x)];
    const bool is_kink = x == kink;
    switch (s.dir) {
      case Dir::SE:
        if (s.label == Label::Zero || (is_kink && (kl == Label::R || kl == Label::K))) {
          rays.push_back({S::Left, D::SW, x, column_i(s, n), is_kink, s.label});
        } else if (is_kink && s.label == Label::One && zero_above_kink) {
          rays.push_back({S::Right, D::NE, x, column_i(s, n), true, s.label});
        }
        break;
      case Dir::SW:
        if (s.label == Label::R) {
          rays.push_back({S::Left, D::NW, x, column_j(s, n), false, s.label});
        } else if (s.label == Label::One && want_special_one && x > kink) {
          rays.push_back({S::Left, D::NW, x, column_j(s, n), false, s.label});
          want_special_one = false;
        } else if (s.label == Label::Zero) {
          rays.push_back({S::Right, D::SE, x, column_j(s, n), false, s.label});
          if (kink < 0 || x < kink) zero_above_kink = true;
        }
        break;
      case Dir::W:
        if (s.label == Label::Zero) {
          rays.push_back({S::Left, D::NW, x, column_j(s, n), false, s.label});
        } else if (s.label == Label::One && want_special_one) {
          // an \R kink right above the bottom meets the -1 below it
          rays.push_back({S::Left, D::NW, x, column_j(s, n), false, s.label});
          want_special_one = false;
        }
        break;
    }
  }

  int se = 0;
  int ne = 0;
  int sw = 0;
  int nw = 0;
  for (const Ray& r : rays) {
    se += r.direction == D::SE;
    ne += r.direction == D::NE;
    sw += r.direction == D::SW;
    nw += r.direction == D::NW;
  }
  if (sw != nw) {
    throw InvariantError("left rays do not balance (" + std::to_string(sw) + " SW, " + std::to_string(nw) +
                         " NW) on " + p.str());
  }
  // NE rays from bottom edges c+1, c+2, ... to the right of the path
  const int extra = se - ne;
  if (extra < 0 || p.c() + extra > n) {
    throw InvariantError("cannot balance right rays on " + p.str());
  }
  for (int t = 1; t <= extra; ++t) {
    rays.push_back({S::Right, D::NE, static_cast<int>(st.size()) + t - 1, p.c() + t, false, Label::Zero});
  }
  return rays;
}

DotSet pair_dots(const std::vector<Ray>& rays, int n) {
  using D = Ray::Direction;
  std::vector<Ray> sw;
  std::vector<Ray> nw;
  std::vector<Ray> se;
  std::vector<Ray> ne;
  for (const Ray& r : rays) {
    switch (r.direction) {
      case D::SW: sw.push_back(r); break;
      case D::NW: nw.push_back(r); break;
      case D::SE: se.push_back(r); break;
      case D::NE: ne.push_back(r); break;
    }
  }
  std::vector<Cell> cells;
  auto by_order = [](const Ray& a, const Ray& b) { return a.order < b.order; };
  std::sort(nw.begin(), nw.end(), by_order);
  std::sort(se.begin(), se.end(), by_order);

  if (auto k = std::find_if(sw.begin(), sw.end(), [](const Ray& r) { return r.from_kink; }); k != sw.end()) {
    const int skip = k->source_label == Label::K ? 1 : 0;
    int seen = 0;
    auto partner = nw.end();
    for (auto it = nw.begin(); it != nw.end(); ++it) {
      if (it->order > k->order && seen++ == skip) {
        partner = it;
        break;
      }
    }
    if (partner == nw.end()) throw InvariantError("kink ray has no NW partner");
    cells.push_back({k->coord, partner->coord});
    nw.erase(partner);
    sw.erase(k);
  }
  if (auto k = std::find_if(ne.begin(), ne.end(), [](const Ray& r) { return r.from_kink; }); k != ne.end()) {
    auto partner = se.end();
    for (auto it = se.begin(); it != se.end(); ++it) {
      if (it->order < k->order) partner = it;
    }
    if (partner == se.end()) throw InvariantError("kink NE ray has no SE partner");
    cells.push_back({k->coord, partner->coord});
    se.erase(partner);
    ne.erase(k);
  }

  auto by_coord = [](const Ray& a, const Ray& b) { return a.coord < b.coord; };
  auto zip = [&](std::vector<Ray>& keep_i, std::vector<Ray>& keep_j, const char* what) {
    if (keep_i.size() != keep_j.size()) throw InvariantError(std::string("unpaired ") + what + " ray");
    std::sort(keep_i.begin(), keep_i.end(), by_coord);
    std::sort(keep_j.begin(), keep_j.end(), by_coord);
    for (std::size_t x = 0; x < keep_i.size(); ++x) cells.push_back({keep_i[x].coord, keep_j[x].coord});
  };
  zip(sw, nw, "left");
  zip(ne, se, "right");

  try {
    return DotSet(n, cells);
  } catch (const InputError& e) {
    throw InvariantError(std::string("pink dots do not form a dot set: ") + e.what());
  }
}

PathRank path_to_rank(const PuzzlePath& p) {
  DotSet d = pair_dots(place_rays(p), p.n());
  IntervalRankMatrix r = rank_from_dots(d);
  return {std::move(d), std::move(r)};
}

int path_codim(const PuzzlePath& p) {
  const std::vector<Step> st = p.steps();
  const int len = static_cast<int>(st.size());
  auto is = [&](int x, Dir d, Label l) {
    const Step& s = st[static_cast<std::size_t>(x)];
    return s.dir == d && s.label == l;
  };
  auto count_sw = [&](int from, int to, Label l) {  // /l edges in [from, to)
    int c = 0;
    for (int x = std::max(from, 0); x < std::min(to, len); ++x) c += is(x, Dir::SW, l);
    return c;
  };
  // NW-ray sources: /R and -0, plus the /1 or -1 claimed by an \R or \K kink
  auto nw_source = [&](int x) { return is(x, Dir::SW, Label::R) || is(x, Dir::W, Label::Zero); };

  // pairs "/R above /0", left dot against right dot
  int codim = 0;
  for (int x = 0; x < len; ++x) {
    if (is(x, Dir::SW, Label::R)) codim += count_sw(x + 1, len, Label::Zero);
  }
  const int kink = p.kink_index();
  if (kink < 0) return codim;

  // The kink dot replaces the dot its partner edge would otherwise carry:
  // drop the partner's pairs from the count above, then add the pairs the
  // kink dot forms with left dots (NW rays above it) and right dots (/0
  // below its partner).
  int partner = -1;
  int extra_left = 0;
  switch (st[static_cast<std::size_t>(kink)].label) {
    case Label::One:
      // partner: the nearest /0 above; its pairs with /R above are already
      // counted, so only the /0 below the kink remain
      for (int x = 0; x < kink; ++x) {
        if (is(x, Dir::SW, Label::Zero)) partner = x;
      }
      return partner < 0 ? codim : codim + count_sw(kink + 1, len, Label::Zero);
    case Label::Zero:
      for (int x = kink + 1; x < len && partner < 0; ++x) {
        if (nw_source(x)) partner = x;
      }
      break;
    case Label::R:
      for (int x = kink + 1; x < len && partner < 0; ++x) {
        if (is(x, Dir::SW, Label::One) || is(x, Dir::W, Label::One)) partner = x;
      }
      break;
    case Label::K: {
      int one = -1;
      for (int x = kink + 1; x < len && partner < 0; ++x) {
        if (one < 0 && is(x, Dir::SW, Label::One)) {
          one = x;
        } else if (one >= 0 && nw_source(x)) {
          partner = x;
        }
      }
      // the kink ray crosses the /1 ray; the /1 dot lies NE of the kink dot
      // and of every right dot below it
      if (one >= 0) extra_left = 1 + count_sw(one + 1, len, Label::Zero);
      break;
    }
  }
  if (partner < 0) throw InvariantError("kink without a partner edge on " + p.str());
  if (is(partner, Dir::SW, Label::R)) codim -= count_sw(partner + 1, len, Label::Zero);
  return codim + count_sw(0, kink, Label::R) + extra_left + count_sw(partner + 1, len, Label::Zero);
}

}  // namespace puzzle
