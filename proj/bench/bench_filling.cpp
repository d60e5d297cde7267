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

#include <benchmark/benchmark.h>

#include "puzzle/filling.hpp"

namespace {

using namespace puzzle;

// Alternating words 0101.. and 1010..: a large KT tree.
std::pair<Word, Word> inputs(int n) {
  std::vector<std::uint8_t> mu(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> nu(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    mu[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x % 2);
    nu[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(1 - x % 2);
  }
  return {Word(mu), Word(nu)};
}

void BM_Serial(benchmark::State& state) {
  const auto [mu, nu] = inputs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(Theory::KT, mu, nu));
}

void BM_Parallel(benchmark::State& state) {
  const auto [mu, nu] = inputs(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants_parallel(Theory::KT, mu, nu, threads));
}

void BM_TableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (const Word& mu : all_words(n, n / 2)) {
      for (const Word& nu : all_words(n, n / 2)) benchmark::DoNotOptimize(structure_constants(Theory::KT, mu, nu));
    }
  }
}

void BM_TableParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(structure_table(Theory::KT, n, n / 2, threads));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{6, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->ArgsProduct({{6}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
