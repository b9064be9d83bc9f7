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

#include "docdup/exact_detector.hpp"

#include "docdup/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace docdup {

namespace {

// Left context of an lcp-interval: the single preceding token id shared by
// all occurrences, kUnset before any occurrence is seen, or kDiverse.
constexpr std::int64_t kUnset = -1;
constexpr std::int64_t kDiverse = -2;

std::int64_t merge_left(std::int64_t a, std::int64_t b) {
  if (a == kUnset) return b;
  if (b == kUnset || a == b) return a;
  return kDiverse;
}

struct Frame {
  std::uint32_t lcp;
  std::uint32_t lb;
  std::int64_t left;
};

}  // namespace

void DetectorConfig::validate() const {
  if (min_tokens < 1) throw UsageError("min_tokens must be at least 1");
  if (min_group_size < 2) throw UsageError("min_group_size must be at least 2");
}

std::vector<TokenId> token_ids(std::span<const Token> tokens) {
  std::unordered_map<std::u32string_view, TokenId> dict;
  std::vector<TokenId> ids;
  ids.reserve(tokens.size());
  for (const auto& tok : tokens) {
    auto [it, fresh] = dict.try_emplace(tok.text, static_cast<TokenId>(dict.size()));
    ids.push_back(it->second);
  }
  return ids;
}

std::vector<std::size_t> thin_overlaps(std::vector<std::size_t> starts,
                                       std::size_t length) {
  std::sort(starts.begin(), starts.end());
  std::vector<std::size_t> kept;
  for (std::size_t s : starts) {
    if (kept.empty() || s >= kept.back() + length) kept.push_back(s);
  }
  return kept;
}

std::vector<TokenRepeat> find_maximal_repeats(std::span<const TokenId> ids,
                                              const DetectorConfig& cfg) {
  cfg.validate();
  const std::size_t n = ids.size();
  std::vector<TokenRepeat> out;
  if (n < 2) return out;

  const SuffixIndex index = build_suffix_index(ids);
  const auto& sa = index.sa;
  const auto& lcp = index.lcp;

  auto leaf_left = [&](std::size_t r) -> std::int64_t {
    return sa[r] == 0 ? kDiverse : static_cast<std::int64_t>(ids[sa[r] - 1]);
  };

  // Each lcp-interval [lb, rb] with value l is a right-maximal repeat of
  // length l; it is also left-maximal iff its left context is diverse.
  auto report = [&](const Frame& f, std::size_t rb) {
    if (f.lcp < cfg.min_tokens || f.left != kDiverse) return;
    std::vector<std::size_t> starts(sa.begin() + f.lb, sa.begin() + rb + 1);
    auto kept = thin_overlaps(std::move(starts), f.lcp);
    if (kept.size() >= cfg.min_group_size) {
      out.push_back(TokenRepeat{f.lcp, std::move(kept)});
    }
  };

  std::vector<Frame> stack{{0, 0, kUnset}};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint32_t cur = i < n ? lcp[i] : 0;
    const std::int64_t leaf = leaf_left(i - 1);
    if (cur > stack.back().lcp) {
      stack.push_back({cur, static_cast<std::uint32_t>(i - 1), leaf});
      continue;
    }
    stack.back().left = merge_left(stack.back().left, leaf);
    while (cur < stack.back().lcp) {
      const Frame f = stack.back();
      stack.pop_back();
      report(f, i - 1);
      if (cur <= stack.back().lcp) {
        stack.back().left = merge_left(stack.back().left, f.left);
      } else {
        stack.push_back({cur, f.lb, f.left});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const TokenRepeat& a, const TokenRepeat& b) {
    if (a.starts.front() != b.starts.front()) return a.starts.front() < b.starts.front();
    return a.length < b.length;
  });
  return out;
}

std::vector<ExactGroup> detect_exact_groups(const Document& doc,
                                            std::span<const Token> tokens,
                                            const DetectorConfig& cfg,
                                            DocId doc_id) {
  const auto ids = token_ids(tokens);
  const auto repeats = find_maximal_repeats(ids, cfg);
  std::vector<ExactGroup> groups;
  groups.reserve(repeats.size());
  for (const auto& rep : repeats) {
    std::vector<TextFragment> occ;
    occ.reserve(rep.starts.size());
    for (std::size_t s : rep.starts) {
      occ.emplace_back(tokens[s].begin, tokens[s + rep.length - 1].end, doc_id);
      occ.back().check_within(doc);
    }
    const auto first = rep.starts.front();
    groups.emplace_back(std::move(occ),
                        join_tokens(tokens.subspan(first, rep.length)));
  }
  return groups;
}

}  // namespace docdup
