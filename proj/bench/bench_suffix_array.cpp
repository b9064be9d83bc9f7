// Copyright 2026 The docdup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include "docdup/suffix_array.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<docdup::TokenId> zipf_tokens(std::size_t n) {
  std::mt19937 rng(11);
  std::vector<double> weights;
  for (int i = 1; i <= 5000; ++i) weights.push_back(1.0 / i);
  std::discrete_distribution<docdup::TokenId> pick(weights.begin(), weights.end());
  std::vector<docdup::TokenId> ids(n);
  for (auto& id : ids) id = pick(rng);
  return ids;
}

void BM_SuffixArraySerial(benchmark::State& state) {
  const auto ids = zipf_tokens(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(docdup::serial::suffix_array(ids));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuffixArrayParallel(benchmark::State& state) {
  const auto ids = zipf_tokens(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(docdup::parallel::suffix_array(ids));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LcpSerial(benchmark::State& state) {
  const auto ids = zipf_tokens(static_cast<std::size_t>(state.range(0)));
  const auto sa = docdup::serial::suffix_array(ids);
  for (auto _ : state) benchmark::DoNotOptimize(docdup::serial::lcp_array(ids, sa));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LcpParallel(benchmark::State& state) {
  const auto ids = zipf_tokens(static_cast<std::size_t>(state.range(0)));
  const auto sa = docdup::serial::suffix_array(ids);
  for (auto _ : state) benchmark::DoNotOptimize(docdup::parallel::lcp_array(ids, sa));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SuffixArraySerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuffixArrayParallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LcpSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LcpParallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
