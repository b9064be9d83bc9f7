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

#include "docdup/omp.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#ifdef _OPENMP
#include <parallel/algorithm>
#endif

namespace docdup {

namespace {

using Keyed = std::pair<std::uint64_t, std::uint32_t>;

// Inputs shorter than this are not worth spinning up a team for.
constexpr std::size_t kParallelCutoff = 1 << 14;

std::uint64_t pair_key(const std::vector<std::uint32_t>& rank, std::size_t i,
                       std::size_t step) {
  const std::size_t n = rank.size();
  const std::uint64_t second = i + step < n ? rank[i + step] + 1ull : 0ull;
  return (static_cast<std::uint64_t>(rank[i]) << 32) | second;
}

}  // namespace

namespace serial {

std::vector<std::uint32_t> suffix_array(std::span<const TokenId> ids) {
  const std::size_t n = ids.size();
  std::vector<Keyed> keyed(n);
  for (std::size_t i = 0; i < n; ++i) keyed[i] = {ids[i], static_cast<std::uint32_t>(i)};

  std::vector<std::uint32_t> rank(n);
  for (std::size_t step = 0;; step = step == 0 ? 1 : step * 2) {
    std::sort(keyed.begin(), keyed.end());
    std::uint32_t distinct = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (r > 0 && keyed[r].first != keyed[r - 1].first) ++distinct;
      rank[keyed[r].second] = distinct;
    }
    if (n == 0 || distinct + 1 == n) break;
    const std::size_t next = step == 0 ? 1 : step * 2;
    for (std::size_t i = 0; i < n; ++i) {
      keyed[i] = {pair_key(rank, i, next), static_cast<std::uint32_t>(i)};
    }
  }

  std::vector<std::uint32_t> sa(n);
  for (std::size_t r = 0; r < n; ++r) sa[r] = keyed[r].second;
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::span<const TokenId> ids,
                                     std::span<const std::uint32_t> sa) {
  // Kasai et al.
  const std::size_t n = ids.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && ids[i + h] == ids[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> suffix_array(std::span<const TokenId> ids) {
  const std::size_t n = ids.size();
  if (n < kParallelCutoff) {
    return serial::suffix_array(ids);
  }
  const auto sn = static_cast<std::int64_t>(n);

  std::vector<Keyed> keyed(n);
  DOCDUP_OMP(parallel for schedule(static))
  for (std::int64_t i = 0; i < sn; ++i) {
    keyed[i] = {ids[i], static_cast<std::uint32_t>(i)};
  }

  std::vector<std::uint32_t> rank(n);
  std::vector<std::uint32_t> boundary(n);
  for (std::size_t step = 0;; step = step == 0 ? 1 : step * 2) {
#ifdef _OPENMP
    __gnu_parallel::sort(keyed.begin(), keyed.end());
#else
    std::sort(keyed.begin(), keyed.end());
#endif
    DOCDUP_OMP(parallel for schedule(static))
    for (std::int64_t r = 0; r < sn; ++r) {
      boundary[r] = (r > 0 && keyed[r].first != keyed[r - 1].first) ? 1u : 0u;
    }
    // Inclusive scan of the boundary flags gives each suffix its bucket.
    std::inclusive_scan(boundary.begin(), boundary.end(), boundary.begin());
    DOCDUP_OMP(parallel for schedule(static))
    for (std::int64_t r = 0; r < sn; ++r) rank[keyed[r].second] = boundary[r];
    if (boundary.back() + 1 == n) break;

    const std::size_t next = step == 0 ? 1 : step * 2;
    DOCDUP_OMP(parallel for schedule(static))
    for (std::int64_t i = 0; i < sn; ++i) {
      keyed[i] = {pair_key(rank, static_cast<std::size_t>(i), next),
                  static_cast<std::uint32_t>(i)};
    }
  }

  std::vector<std::uint32_t> sa(n);
  DOCDUP_OMP(parallel for schedule(static))
  for (std::int64_t r = 0; r < sn; ++r) sa[r] = keyed[r].second;
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::span<const TokenId> ids,
                                     std::span<const std::uint32_t> sa) {
  const std::size_t n = ids.size();
  if (n < kParallelCutoff) {
    return serial::lcp_array(ids, sa);
  }
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  DOCDUP_OMP(parallel for schedule(static))
  for (std::int64_t r = 0; r < sn; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);

  // Kasai per contiguous chunk of text positions. Restarting h at zero at
  // a chunk boundary only loses the carried lower bound, not correctness.
  DOCDUP_OMP(parallel)
  {
    const auto threads = static_cast<std::size_t>(omp_get_num_threads());
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const std::size_t lo = n * t / threads;
    const std::size_t hi = n * (t + 1) / threads;
    std::size_t h = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (rank[i] == 0) {
        h = 0;
        continue;
      }
      const std::size_t j = sa[rank[i] - 1];
      while (i + h < n && j + h < n && ids[i + h] == ids[j + h]) ++h;
      lcp[rank[i]] = static_cast<std::uint32_t>(h);
      if (h > 0) --h;
    }
  }
  return lcp;
}

}  // namespace parallel

SuffixIndex build_suffix_index(std::span<const TokenId> ids) {
  SuffixIndex index;
  index.sa = parallel::suffix_array(ids);
  index.lcp = parallel::lcp_array(ids, index.sa);
  return index;
}

}  // namespace docdup
