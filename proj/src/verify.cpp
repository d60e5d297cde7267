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

#include "puzzle/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "puzzle/oracle.hpp"
#include "puzzle/pink_dots.hpp"

namespace puzzle {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr int kRandomMatricesPerDotSet = 1000;
constexpr int kRandomPrime = 3;
// Brute-force cover betweenness is cubic in the number of dot sets.
constexpr int kCoverBruteForceN = 6;

class Recorder {
 public:
  explicit Recorder(std::string suite) { r_.suite = std::move(suite); }

  void check(bool ok, const std::function<Failure()>& describe) {
    ++r_.cases;
    if (ok) return;
    ++r_.failed;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(describe());
  }

  void fail(Failure f) {
    ++r_.cases;
    ++r_.failed;
    if (r_.failures.size() < kKeptFailures) r_.failures.push_back(std::move(f));
  }

  Report done() { return std::move(r_); }

 private:
  Report r_;
};

std::string words(const Word& mu, const Word& nu) { return "mu=" + mu.str() + " nu=" + nu.str(); }

std::string dots_input(const DotSet& d) { return "n=" + std::to_string(d.n()) + " dots=" + d.str(); }

template <typename F>
void for_pairs(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const std::vector<Word> ws = all_words(n, k);
      for (const Word& mu : ws) {
        for (const Word& nu : ws) f(n, k, ws, mu, nu);
      }
    }
  }
}

template <typename F>
void for_nodes(const DegenerationNode& node, F&& f) {
  f(node);
  for (const DegenerationNode& c : node.children) for_nodes(c, f);
}

Coefficient lookup(const CoefficientMap& m, const Word& w, Theory t) {
  auto it = m.find(w);
  return it == m.end() ? zero_coefficient(t, w.size()) : it->second;
}

// --- suites ----------------------------------------------------------------

Report pink_dots_suite(int max_n) {
  Recorder rec("pink-dots");
  for_pairs(max_n, [&](int n, int k, const auto&, const Word& mu, const Word& nu) {
    const PuzzlePath start = PuzzlePath::initial(mu, nu);
    if (!validate_path(start).empty()) return;
    try {
      const DegenerationNode root = trace(mu, nu);
      for_nodes(root, [&](const DegenerationNode& node) {
        rec.check(node.dots.size() == n - k, [&] {
          return Failure{words(mu, nu) + " path=" + node.path.str(), std::to_string(n - k) + " dots",
                         std::to_string(node.dots.size()) + " dots"};
        });
      });
    } catch (const std::exception& e) {
      rec.fail({words(mu, nu), "rays pair up", e.what()});
    }
  });
  return rec.done();
}

Report trace_suite(int max_n) {
  Recorder rec("trace");
  for_pairs(max_n, [&](int, int, const auto&, const Word& mu, const Word& nu) {
    try {
      const DegenerationNode root = trace(mu, nu);
      const std::vector<TraceFailure> bad = check_trace(root);
      rec.check(bad.empty(), [&] {
        return Failure{words(mu, nu) + " path=" + bad.front().path, "no trace failures",
                       bad.front().message + " (" + std::to_string(bad.size()) + " in total)"};
      });
    } catch (const std::exception& e) {
      rec.fail({words(mu, nu), "trace builds", e.what()});
    }
  });
  return rec.done();
}

Report identifications_suite(int max_n) {
  Recorder rec("identifications");
  for_pairs(max_n, [&](int, int, const auto&, const Word& mu, const Word& nu) {
    const PuzzlePath start = PuzzlePath::initial(mu, nu);
    if (!validate_path(start).empty()) return;
    const DotSet d = path_to_rank(start).dots;
    const auto env = envelope(d);
    const int codim = envelope_codim(d);
    rec.check(env == std::make_pair(mu, nu) && codim == 0, [&] {
      return Failure{words(mu, nu) + " initial path", "envelope " + mu.str() + "," + nu.str() + " codim 0",
                     "envelope " + env.first.str() + "," + env.second.str() + " codim " + std::to_string(codim)};
    });
  });
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::vector<std::uint8_t> top(static_cast<std::size_t>(n), 0);
      std::fill(top.end() - k, top.end(), std::uint8_t{1});
      for (const Word& lambda : all_words(n, k)) {
        const PathRank pr = path_to_rank(PuzzlePath::final_path(lambda));
        const auto conds = nontrivial_conditions(pr.dots);
        const bool first_row =
            std::all_of(conds.begin(), conds.end(), [](const RankCondition& c) { return c.cell.i == 1; });
        bool windows = true;
        int ones = 0;
        for (int j = 1; j <= n; ++j) {
          ones += lambda.bit(j);
          windows = windows && pr.rank.at(1, j) == ones;
        }
        const auto env = envelope(pr.dots);
        rec.check(first_row && windows && env == std::make_pair(Word(top), lambda) && envelope_codim(pr.dots) == 0,
                  [&] {
                    return Failure{"final path lambda=" + lambda.str(),
                                   "first-row conditions r_1j = #1s of lambda in [1,j]",
                                   "dots " + pr.dots.str() + " conditions " + format_conditions(conds)};
                  });
      }
    }
  }
  return rec.done();
}

Report inversion_suite(int max_n) {
  Recorder rec("inversion");
  for_pairs(max_n, [&](int, int, const auto&, const Word& mu, const Word& nu) {
    for (const PuzzleResult& r : enumerate_puzzles(mu, nu)) {
      const Boundary b = read_boundary(r.puzzle);
      const int lhs = inversions(nu) + r.puzzle.count(BranchKind::Equivariant);
      const int rhs = inversions(r.lambda) + inversions(mu) + r.puzzle.count(BranchKind::TopK);
      rec.check(lhs == rhs && b.lambda == r.lambda && b.mu == mu && b.nu == nu, [&] {
        return Failure{words(mu, nu) + " lambda=" + r.lambda.str(), "|nu| + #equivariant = |lambda| + |mu| + #topK",
                       std::to_string(lhs) + " vs " + std::to_string(rhs)};
      });
    }
  });
  return rec.done();
}

Report specialization_suite(int max_n, const WeightTable& table) {
  Recorder rec("specialization");
  for_pairs(max_n, [&](int n, int, const auto& ws, const Word& mu, const Word& nu) {
    CoefficientMap by[4];
    for (Theory t : kTheories) by[static_cast<int>(t)] = structure_constants(t, mu, nu, table);
    for (const Word& lambda : ws) {
      const auto kt = std::get<LPoly>(lookup(by[3], lambda, Theory::KT));
      const auto k = std::get<LPoly>(lookup(by[2], lambda, Theory::K));
      const auto ht = std::get<Poly>(lookup(by[1], lambda, Theory::HT));
      const auto h = std::get<Poly>(lookup(by[0], lambda, Theory::H));
      const std::string in = words(mu, nu) + " lambda=" + lambda.str();
      rec.check(eval_at_one(kt) == eval_at_one(k), [&] {
        return Failure{in + " KT->K", render(k), eval_at_one(kt).str()};
      });
      // a K-theory term below the cohomological degree has no H_T counterpart
      const int d = inversions(lambda) + inversions(mu) - inversions(nu);
      if (d >= 0) {
        std::string got;
        bool ok = false;
        try {
          const Poly low = lowest_form(kt, d);
          ok = low == ht;
          got = render(low);
        } catch (const std::exception& e) {
          got = e.what();
        }
        rec.check(ok, [&] { return Failure{in + " KT->HT", render(ht), got}; });
      } else {
        rec.check(ht.is_zero(), [&] { return Failure{in + " HT below degree", "0", render(ht)}; });
      }
      rec.check(y_to_zero(ht) == y_to_zero(h) && (d == 0 || h.is_zero()), [&] {
        return Failure{in + " HT->H", render(h), render(ht)};
      });
    }
    (void)n;
  });
  return rec.done();
}

Report commutativity_suite(int max_n, const WeightTable& table) {
  Recorder rec("commutativity");
  for (Theory t : {Theory::H, Theory::HT, Theory::K}) {
    for (int n = 1; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        const std::vector<Word> ws = all_words(n, k);
        std::map<std::pair<Word, Word>, CoefficientMap> table_by_pair;
        for (const Word& mu : ws) {
          for (const Word& nu : ws) table_by_pair[{mu, nu}] = structure_constants(t, mu, nu, table);
        }
        for (const Word& mu : ws) {
          for (const Word& nu : ws) {
            for (const Word& lambda : ws) {
              const Coefficient a = lookup(table_by_pair[{mu, nu}], lambda, t);
              const Coefficient b = lookup(table_by_pair[{lambda, nu}], mu, t);
              rec.check(a == b, [&] {
                return Failure{std::string(to_string(t)) + " lambda=" + lambda.str() + " " + words(mu, nu),
                               render(a), "swapped: " + render(b)};
              });
            }
          }
        }
      }
    }
  }
  return rec.done();
}

Report lr_suite(int max_n) {
  Recorder rec("lr-oracle");
  for_pairs(max_n, [&](int, int, const auto& ws, const Word& mu, const Word& nu) {
    const CoefficientMap h = structure_constants(Theory::H, mu, nu);
    for (const Word& lambda : ws) {
      if (inversions(lambda) + inversions(mu) != inversions(nu)) continue;
      const Integer puzzles = y_to_zero(std::get<Poly>(lookup(h, lambda, Theory::H)));
      const std::int64_t lr = lr_oracle(lambda, mu, nu);
      rec.check(puzzles == lr, [&] {
        return Failure{"lambda=" + lambda.str() + " " + words(mu, nu), std::to_string(lr), puzzles.str()};
      });
    }
  });
  return rec.done();
}

Report hall_suite(int max_n) {
  Recorder rec("hall");
  for (int n = 1; n <= max_n; ++n) {
    for (const DotSet& d : all_dotsets(n)) {
      for (const Word& w : all_words(n, n - d.size())) {
        const bool window = fixed_point_in(d, w);
        const bool matching = matching_exists(d, w);
        rec.check(window == matching, [&] {
          return Failure{dots_input(d) + " word=" + w.str(), "window test " + std::to_string(window),
                         "matching " + std::to_string(matching)};
        });
      }
    }
  }
  return rec.done();
}

bool below(const IntervalRankMatrix& m, const IntervalRankMatrix& r, const std::vector<Cell>& cells) {
  return std::all_of(cells.begin(), cells.end(), [&](Cell c) { return m.at(c.i, c.j) <= r.at(c.i, c.j); });
}

std::vector<Cell> upper_cells(int n) {
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) out.push_back({i, j});
  }
  return out;
}

Report essential_suite(int max_n, std::uint64_t seed) {
  Recorder rec("essential");
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const std::vector<Cell> all = upper_cells(n);
    const std::vector<DotSet> sets = all_dotsets(n);
    for (std::size_t x = 0; x < sets.size(); ++x) {
      const DotSet& d = sets[x];
      const int k = n - d.size();
      const IntervalRankMatrix r = rank_from_dots(d);
      const std::vector<Cell> ess = essential_set(d);
      auto test = [&](const Matrix& m, const std::string& what) {
        const IntervalRankMatrix rm = rank_of_matrix(m, kRandomPrime);
        const bool full = below(rm, r, all);
        const bool reduced = below(rm, r, ess);
        rec.check(full == reduced, [&] {
          return Failure{dots_input(d) + " " + what, "full system " + std::to_string(full),
                         "essential subsystem " + std::to_string(reduced)};
        });
      };
      // coordinate subspaces, exhaustively
      for (const Word& w : all_words(n, k)) {
        Matrix m{k, n, std::vector<std::int64_t>(static_cast<std::size_t>(k * n), 0)};
        int row = 0;
        for (int j = 1; j <= n; ++j) {
          if (w.bit(j)) m.a[static_cast<std::size_t>(row++ * n + j - 1)] = 1;
        }
        test(m, "fixed point " + w.str());
      }
      // random matrices; sparse ones land in the variety more often
      std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(n) * 4096 + x)));
      std::uniform_int_distribution<int> entry(1, kRandomPrime - 1);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (int t = 0; t < kRandomMatricesPerDotSet; ++t) {
        const double density = unit(gen);
        Matrix m{k, n, std::vector<std::int64_t>(static_cast<std::size_t>(k * n), 0)};
        for (auto& v : m.a) v = unit(gen) < density ? entry(gen) : 0;
        std::ostringstream what;
        what << "seed=" << seed << " sample=" << t << " M=[";
        for (std::size_t e = 0; e < m.a.size(); ++e) what << (e ? "," : "") << m.a[e];
        what << "]";
        test(m, what.str());
      }
    }
  }
  return rec.done();
}

Report covers_suite(int max_n) {
  Recorder rec("covers");
  for (int n = 1; n <= max_n; ++n) {
    for (const DotSet& d : all_dotsets(n)) {
      const DotSet back = dots_from_rank(rank_from_dots(d));
      rec.check(back == d, [&] { return Failure{dots_input(d) + " round trip", d.str(), back.str()}; });
    }
  }
  for (int n = 1; n <= std::min(max_n, kCoverBruteForceN); ++n) {
    for (int size = 0; size <= n; ++size) {
      const std::vector<DotSet> sets = all_dotsets(n, size);
      std::vector<IntervalRankMatrix> ranks;
      ranks.reserve(sets.size());
      for (const DotSet& d : sets) ranks.push_back(rank_from_dots(d));
      const std::vector<Word> ws = all_words(n, n - size);
      for (std::size_t x = 0; x < sets.size(); ++x) {
        std::vector<DotSet> truth;
        for (std::size_t y = 0; y < sets.size(); ++y) {
          if (y == x || !ranks[y].le(ranks[x])) continue;
          bool between = false;
          for (std::size_t z = 0; z < sets.size() && !between; ++z) {
            between = z != x && z != y && ranks[y].le(ranks[z]) && ranks[z].le(ranks[x]);
          }
          if (!between) truth.push_back(sets[y]);
        }
        const std::vector<DotSet> got = covers(sets[x]);
        auto list = [](const std::vector<DotSet>& v) {
          std::string s;
          for (const DotSet& d : v) s += "{" + d.str() + "}";
          return s.empty() ? std::string("none") : s;
        };
        rec.check(got == truth, [&] { return Failure{dots_input(sets[x]) + " covers", list(truth), list(got)}; });

        const auto [rows_word, cols_word] = envelope(sets[x]);
        for (const Word& w : ws) {
          const bool member = fixed_point_in(sets[x], w);
          // a cover is a smaller variety, so its fixed points stay inside
          for (const DotSet& c : got) {
            if (!fixed_point_in(c, w)) continue;
            rec.check(member, [&] {
              return Failure{dots_input(sets[x]) + " cover " + c.str() + " word=" + w.str(),
                             "member of the covered set", "not a member"};
            });
          }
          if (!member) continue;
          // inside the Richardson envelope: the window sums of w are bounded by
          // those of both envelope words on initial and final windows
          bool inside = true;
          int sw = 0;
          int sr = 0;
          int sc = 0;
          for (int j = 1; j <= n; ++j) {
            sw += w.bit(j);
            sr += rows_word.bit(j);
            sc += cols_word.bit(j);
            inside = inside && sw >= sr && sw <= sc;
          }
          rec.check(inside, [&] {
            return Failure{dots_input(sets[x]) + " word=" + w.str(),
                           "between envelope words " + rows_word.str() + " and " + cols_word.str(), "outside"};
          });
        }
      }
    }
  }
  return rec.done();
}

using SuiteFn = std::function<Report(int, std::uint64_t, const WeightTable&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"pink-dots", [](int n, std::uint64_t, const WeightTable&) { return pink_dots_suite(n); }},
      {"trace", [](int n, std::uint64_t, const WeightTable&) { return trace_suite(n); }},
      {"identifications", [](int n, std::uint64_t, const WeightTable&) { return identifications_suite(n); }},
      {"inversion", [](int n, std::uint64_t, const WeightTable&) { return inversion_suite(n); }},
      {"specialization", [](int n, std::uint64_t, const WeightTable& t) { return specialization_suite(n, t); }},
      {"commutativity", [](int n, std::uint64_t, const WeightTable& t) { return commutativity_suite(n, t); }},
      {"lr-oracle", [](int n, std::uint64_t, const WeightTable&) { return lr_suite(n); }},
      {"hall", [](int n, std::uint64_t, const WeightTable&) { return hall_suite(n); }},
      {"essential", [](int n, std::uint64_t s, const WeightTable&) { return essential_suite(n, s); }},
      {"covers", [](int n, std::uint64_t, const WeightTable&) { return covers_suite(n); }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Report run_suite(const std::string& name, int max_n, std::uint64_t seed, const WeightTable& table) {
  if (max_n < 1 || max_n > kMaxVerifyN) {
    throw ResourceError("max-n must be between 1 and " + std::to_string(kMaxVerifyN));
  }
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(max_n, seed, table);
  }
  throw InputError("unknown suite \"" + name + "\"");
}

std::vector<Report> verify_suite(const VerifyOptions& opts) {
  std::vector<std::string> chosen;
  if (opts.suite) {
    chosen.push_back(*opts.suite);
  } else {
    chosen = suite_names();
  }
  // validate before starting any work
  for (const std::string& s : chosen) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw InputError("unknown suite \"" + s + "\"");
    }
  }
  if (opts.max_n < 1 || opts.max_n > kMaxVerifyN) {
    throw ResourceError("max-n must be between 1 and " + std::to_string(kMaxVerifyN));
  }

  std::vector<Report> out(chosen.size());
  std::vector<std::string> errors(chosen.size());
  const int saved = omp_get_max_threads();
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t x = 0; x < chosen.size(); ++x) {
    try {
      out[x] = run_suite(chosen[x], opts.max_n, opts.seed, opts.table);
    } catch (const std::exception& e) {
      out[x].suite = chosen[x];
      out[x].cases = 1;
      out[x].failed = 1;
      out[x].failures.push_back({"max_n=" + std::to_string(opts.max_n), "suite completes", e.what()});
    }
  }
  omp_set_num_threads(saved);
  return out;
}

}  // namespace puzzle
