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

#include <omp.h>

#include <deque>

#include "filling_detail.hpp"
#include "puzzle/errors.hpp"

namespace puzzle {

namespace {

template <typename P>
struct Task {
  PuzzlePath path;
  P acc;
};

// Expands the tree breadth-first until there are enough independent
// subtrees to keep every thread busy.
template <typename P>
std::vector<Task<P>> frontier(Theory t, const PuzzlePath& start, int n, const WeightTable& table,
                              std::size_t target) {
  std::deque<Task<P>> q;
  q.push_back({start, P::constant(n, 1)});
  std::vector<Task<P>> done;
  while (!q.empty() && q.size() + done.size() < target) {
    Task<P> cur = std::move(q.front());
    q.pop_front();
    if (cur.path.is_final()) {
      done.push_back(std::move(cur));
      continue;
    }
    for (const Move& mv : legal_branches(cur.path)) {
      if (table.is_zero(t, mv.branch.kind)) continue;
      q.push_back({mv.next, cur.acc * detail::weight_in<P>(t, mv.branch, n, table)});
    }
  }
  std::vector<Task<P>> out(std::make_move_iterator(done.begin()), std::make_move_iterator(done.end()));
  out.insert(out.end(), std::make_move_iterator(q.begin()), std::make_move_iterator(q.end()));
  return out;
}

template <typename P>
CoefficientMap run_parallel(Theory t, const PuzzlePath& start, int n, const WeightTable& table) {
  const auto threads = static_cast<std::size_t>(omp_get_max_threads());
  std::vector<Task<P>> tasks = frontier<P>(t, start, n, table, 8 * threads);
  std::vector<std::map<Word, P>> partial(tasks.size());
  std::vector<std::string> errors(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t x = 0; x < tasks.size(); ++x) {
    try {
      detail::accumulate(t, tasks[x].path, tasks[x].acc, table, partial[x]);
    } catch (const std::exception& e) {
      errors[x] = e.what();
    }
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw InvariantError(e);
  }
  // merge in task order so the result does not depend on the schedule
  std::map<Word, P> merged;
  for (auto& part : partial) {
    for (auto& [w, c] : part) {
      auto [it, inserted] = merged.try_emplace(w, std::move(c));
      if (!inserted) it->second += c;
    }
  }
  return detail::to_coefficients(std::move(merged));
}

struct ThreadScope {
  explicit ThreadScope(int threads) : saved(omp_get_max_threads()) {
    if (threads > 0) omp_set_num_threads(threads);
  }
  ~ThreadScope() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

CoefficientMap structure_constants_parallel(Theory t, const Word& mu, const Word& nu, int threads,
                                            const WeightTable& table) {
  detail::check_words(mu, nu);
  const PuzzlePath start = PuzzlePath::initial(mu, nu);
  if (!validate_path(start).empty()) return {};
  ThreadScope scope(threads);
  if (is_laurent(t)) return run_parallel<LPoly>(t, start, mu.size(), table);
  return run_parallel<Poly>(t, start, mu.size(), table);
}

std::vector<TableEntry> structure_table(Theory t, int n, int k, int threads, const WeightTable& table) {
  if (n < 1 || k < 0 || k > n) throw InputError("need 0 <= k <= n and n >= 1");
  const std::vector<Word> words = all_words(n, k);
  std::vector<TableEntry> out;
  out.reserve(words.size() * words.size());
  for (const Word& mu : words) {
    for (const Word& nu : words) out.push_back({mu, nu, {}});
  }
  std::vector<std::string> errors(out.size());
  ThreadScope scope(threads);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t x = 0; x < out.size(); ++x) {
    try {
      out[x].coefficients = structure_constants(t, out[x].mu, out[x].nu, table);
    } catch (const std::exception& e) {
      errors[x] = e.what();
    }
  }
  for (const std::string& e : errors) {
    if (!e.empty()) throw InvariantError(e);
  }
  return out;
}

}  // namespace puzzle
