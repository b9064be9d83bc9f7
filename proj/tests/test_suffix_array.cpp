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

#include "docdup/suffix_array.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace docdup;

namespace {

std::vector<std::uint32_t> naive_sa(const std::vector<TokenId>& ids) {
  std::vector<std::uint32_t> sa(ids.size());
  std::iota(sa.begin(), sa.end(), 0u);
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(ids.begin() + a, ids.end(), ids.begin() + b,
                                        ids.end());
  });
  return sa;
}

std::vector<std::uint32_t> naive_lcp(const std::vector<TokenId>& ids,
                                     const std::vector<std::uint32_t>& sa) {
  std::vector<std::uint32_t> lcp(sa.size(), 0);
  for (std::size_t r = 1; r < sa.size(); ++r) {
    std::uint32_t h = 0;
    while (sa[r - 1] + h < ids.size() && sa[r] + h < ids.size() &&
           ids[sa[r - 1] + h] == ids[sa[r] + h]) {
      ++h;
    }
    lcp[r] = h;
  }
  return lcp;
}

std::vector<TokenId> random_ids(std::mt19937& rng, std::size_t n, TokenId alphabet) {
  std::vector<TokenId> ids(n);
  for (auto& id : ids) id = rng() % alphabet;
  return ids;
}

}  // namespace

TEST_CASE("suffix array of (1,2,1)") {
  const std::vector<TokenId> ids{1, 2, 1};
  CHECK(naive_sa(ids) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(serial::suffix_array(ids) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(parallel::suffix_array(ids) == std::vector<std::uint32_t>{2, 0, 1});
  CHECK(build_suffix_index(ids).lcp == std::vector<std::uint32_t>{0, 1, 0});
}

TEST_CASE("empty and singleton inputs") {
  const std::vector<TokenId> none;
  const auto index = build_suffix_index(none);
  CHECK(index.sa.empty());
  CHECK(index.lcp.empty());
  const std::vector<TokenId> one{42};
  CHECK(build_suffix_index(one).sa == std::vector<std::uint32_t>{0});
  CHECK(build_suffix_index(one).lcp == std::vector<std::uint32_t>{0});
}

TEST_CASE("all-equal ids") {
  const std::size_t n = 9;
  const std::vector<TokenId> ids(n, 3);
  const auto index = build_suffix_index(ids);
  CHECK(index.sa == naive_sa(ids));
  CHECK(index.lcp == naive_lcp(ids, index.sa));
  // Shorter suffixes first; each shares all of itself with the next.
  for (std::size_t r = 0; r < n; ++r) {
    CHECK(index.sa[r] == n - 1 - r);
    CHECK(index.lcp[r] == r);
  }
}

TEST_CASE("serial kernels match the naive oracle on random input") {
  std::mt19937 rng(1);
  for (int round = 0; round < 300; ++round) {
    const auto ids = random_ids(rng, rng() % 120, 1 + rng() % 6);
    const auto sa = serial::suffix_array(ids);
    REQUIRE(sa == naive_sa(ids));
    REQUIRE(serial::lcp_array(ids, sa) == naive_lcp(ids, sa));
  }
}

TEST_CASE("parallel kernels reproduce the serial reference") {
  std::mt19937 rng(2);
  // Above the parallel cutoff, including a highly periodic input.
  std::vector<std::vector<TokenId>> inputs;
  inputs.push_back(random_ids(rng, 40000, 4));
  inputs.push_back(random_ids(rng, 70000, 1000));
  std::vector<TokenId> periodic(50000);
  for (std::size_t i = 0; i < periodic.size(); ++i) periodic[i] = (i % 7 == 0) ? 1 : 2;
  inputs.push_back(std::move(periodic));
  for (const auto& ids : inputs) {
    const auto sa = serial::suffix_array(ids);
    CHECK(parallel::suffix_array(ids) == sa);
    CHECK(parallel::lcp_array(ids, sa) == serial::lcp_array(ids, sa));
  }
}

TEST_CASE("suffix array is a sorted permutation") {
  std::mt19937 rng(3);
  const auto ids = random_ids(rng, 30000, 3);
  const auto index = build_suffix_index(ids);
  std::vector<std::uint32_t> sorted = index.sa;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) REQUIRE(sorted[i] == i);
  for (std::size_t r = 1; r < index.sa.size(); ++r) {
    const auto a = index.sa[r - 1], b = index.sa[r];
    const auto h = index.lcp[r];
    // Agree on h ids, then differ (or the earlier suffix ends).
    REQUIRE(std::equal(ids.begin() + a, ids.begin() + a + h, ids.begin() + b));
    if (a + h < ids.size()) {
      REQUIRE(b + h < ids.size());
      REQUIRE(ids[a + h] < ids[b + h]);
    }
  }
}
