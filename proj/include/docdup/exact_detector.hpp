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

#pragma once

#include "docdup/core_model.hpp"
#include "docdup/ingest.hpp"
#include "docdup/suffix_array.hpp"

#include <span>
#include <vector>

namespace docdup {

struct DetectorConfig {
  /// Minimum clone length in tokens.
  std::size_t min_tokens = 5;
  /// Minimum number of disjoint occurrences.
  std::size_t min_group_size = 2;

  /// Throws UsageError when min_tokens < 1 or min_group_size < 2.
  void validate() const;
};

/// Maps token texts to dense ids in order of first appearance.
std::vector<TokenId> token_ids(std::span<const Token> tokens);

/// A maximal repeat in token space: length and sorted, thinned starts.
struct TokenRepeat {
  std::size_t length = 0;
  std::vector<std::size_t> starts;
};

/// Keeps a start iff it does not overlap the last kept one.
std::vector<std::size_t> thin_overlaps(std::vector<std::size_t> starts,
                                       std::size_t length);

/// Left- and right-maximal repeats of >= min_tokens ids with at least
/// min_group_size disjoint occurrences, ordered by (first start, length).
std::vector<TokenRepeat> find_maximal_repeats(std::span<const TokenId> ids,
                                              const DetectorConfig& cfg);

/// Exact groups in symbol coordinates, sorted by first occurrence.
std::vector<ExactGroup> detect_exact_groups(const Document& doc,
                                            std::span<const Token> tokens,
                                            const DetectorConfig& cfg,
                                            DocId doc_id = 0);

}  // namespace docdup
