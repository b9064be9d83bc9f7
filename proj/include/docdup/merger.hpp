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

// Iterative construction of near-duplicate groups from exact groups.
//
// Each pass walks a position-ordered snapshot of the live groups. A group
// with nearby partners is merged with the closest one; both leave the live
// set and the interval tree immediately, and the merged group becomes live
// (and queryable) only when the pass ends. Passes repeat until one merges
// nothing. Survivors, merged or not, form the output.

#include "docdup/core_model.hpp"
#include "docdup/interval_tree.hpp"
#include "docdup/rational.hpp"

#include <map>
#include <vector>

namespace docdup {

struct MergeStep {
  std::size_t pass = 0;
  GroupRef group = 0;    ///< the group being expanded
  GroupRef partner = 0;  ///< its closest nearby group
  GroupRef result = 0;   ///< id assigned to the concatenation
};

class MergeState {
 public:
  /// Input order does not matter; groups are canonically sorted and
  /// numbered 0..n-1 first. Throws UsageError for tau < 0.
  MergeState(std::vector<ExactGroup> set_g, Rational tau = default_threshold());

  /// Groups whose concatenation with `id`, in either order, is a
  /// near-duplicate group. Sorted by id.
  std::vector<GroupRef> nearby(GroupRef id) const;

  /// Candidate minimizing the variational-group distance to `id`; ties go
  /// to the earlier first occurrence, then the smaller id. Throws
  /// UsageError on an empty candidate list.
  GroupRef closest(GroupRef id, std::span<const GroupRef> candidates) const;

  /// One sweep plus Join. Returns the ids created.
  std::vector<GroupRef> merge_pass();

  /// Passes until fixpoint; returns survivors ordered by first occurrence.
  std::vector<VariationalGroup> run();

  const VariationalGroup& group(GroupRef id) const;
  bool is_live(GroupRef id) const { return live_.contains(id); }
  std::size_t live_count() const { return live_.size(); }
  /// Ids never merged (still exact) and ids built by merging.
  std::vector<GroupRef> unmerged_exact() const;
  std::vector<GroupRef> merged() const;

  const IntervalTree& tree() const { return tree_; }
  const Rational& threshold() const { return tau_; }
  std::size_t passes() const { return passes_; }
  const std::vector<MergeStep>& trace() const { return trace_; }

 private:
  void add_intervals(GroupRef id);
  std::vector<GroupRef> snapshot() const;

  Rational tau_;
  std::size_t exact_count_ = 0;
  GroupRef next_id_ = 0;
  std::map<GroupRef, VariationalGroup> live_;
  IntervalTree tree_;
  std::size_t passes_ = 0;
  std::vector<MergeStep> trace_;
};

/// Canonical order for inputs and outputs: lexicographic over all
/// fragments taken in document order.
bool canonical_less(const VariationalGroup& a, const VariationalGroup& b);

std::vector<VariationalGroup> construct_near_duplicate_groups(
    std::vector<ExactGroup> set_g, const Rational& tau = default_threshold());

}  // namespace docdup
