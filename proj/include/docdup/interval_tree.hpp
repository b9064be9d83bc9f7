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
#include "docdup/rational.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace docdup {

using GroupRef = std::uint64_t;

struct IntervalOwner {
  GroupRef group = 0;
  std::uint32_t tuple = 0;
  friend bool operator==(const IntervalOwner&, const IntervalOwner&) = default;
  friend auto operator<=>(const IntervalOwner&, const IntervalOwner&) = default;
};

/// Closed interval with bounds scaled by the threshold denominator, so
/// that 3/20-fractional endpoints stay integral.
struct ExtendedInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  IntervalOwner owner;

  bool intersects(std::int64_t probe_lo, std::int64_t probe_hi) const {
    return lo <= probe_hi && probe_lo <= hi;
  }
  bool intersects(const ExtendedInterval& other) const {
    return intersects(other.lo, other.hi);
  }
  friend bool operator==(const ExtendedInterval&,
                         const ExtendedInterval&) = default;
  friend auto operator<=>(const ExtendedInterval&,
                          const ExtendedInterval&) = default;
};

/// Tuple k of `vg` widened by its remaining gap budget on each side:
/// [b_1 - x, e_N + x] with x = tau * fixed length - gap sum. For a lifted
/// exact group this is the occurrence widened by tau * |g|. Bounds are
/// multiplied by tau's denominator. Not clamped to the document.
ExtendedInterval extended_interval(const VariationalGroup& vg, std::size_t k,
                                   const Rational& tau,
                                   IntervalOwner owner = {});

/// Centered interval tree. Each node keeps the intervals containing its
/// center; intervals entirely left or right of it live in the subtrees.
class IntervalTree {
 public:
  IntervalTree();
  ~IntervalTree();
  IntervalTree(IntervalTree&&) noexcept;
  IntervalTree& operator=(IntervalTree&&) noexcept;

  /// Balanced build over the sorted endpoint set.
  static IntervalTree build(std::vector<ExtendedInterval> intervals);

  void insert(const ExtendedInterval& interval);

  /// Drops every interval owned by `group`; returns how many went. An
  /// absent group is a no-op that logs a warning.
  std::size_t remove(GroupRef group);

  /// Stored intervals meeting [lo, hi] (touching counts), ordered by
  /// (lo, hi, owner).
  std::vector<ExtendedInterval> query(std::int64_t lo, std::int64_t hi) const;
  std::vector<ExtendedInterval> query(const ExtendedInterval& probe) const {
    return query(probe.lo, probe.hi);
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::size_t depth() const;

 private:
  struct Node;

  static std::unique_ptr<Node> build_node(std::vector<ExtendedInterval> items,
                                          IntervalTree& tree);
  void record(Node* node, GroupRef group);

  std::unique_ptr<Node> root_;
  std::unordered_map<GroupRef, std::vector<Node*>> locations_;
  std::size_t size_ = 0;
};

/// One interval per occurrence of every group; group i is owner i.
IntervalTree initiate(std::span<const ExactGroup> groups, const Rational& tau);

}  // namespace docdup
