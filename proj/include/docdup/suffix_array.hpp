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

// Suffix and LCP arrays over dense token ids.
//
// Each kernel has a serial reference and an OpenMP variant; both must
// produce identical arrays. build_suffix_index() picks the parallel one.

#include <cstdint>
#include <span>
#include <vector>

namespace docdup {

using TokenId = std::uint32_t;

struct SuffixIndex {
  /// sa[r] = start of the r-th smallest suffix. A proper prefix sorts first.
  std::vector<std::uint32_t> sa;
  /// lcp[r] = common prefix of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
  std::vector<std::uint32_t> lcp;
};

namespace serial {
std::vector<std::uint32_t> suffix_array(std::span<const TokenId> ids);
std::vector<std::uint32_t> lcp_array(std::span<const TokenId> ids,
                                     std::span<const std::uint32_t> sa);
}  // namespace serial

namespace parallel {
std::vector<std::uint32_t> suffix_array(std::span<const TokenId> ids);
std::vector<std::uint32_t> lcp_array(std::span<const TokenId> ids,
                                     std::span<const std::uint32_t> sa);
}  // namespace parallel

SuffixIndex build_suffix_index(std::span<const TokenId> ids);

}  // namespace docdup
