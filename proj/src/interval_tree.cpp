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

#include "docdup/interval_tree.hpp"

#include "docdup/error.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

namespace docdup {

struct IntervalTree::Node {
  std::int64_t center = 0;
  std::vector<ExtendedInterval> items;
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

ExtendedInterval extended_interval(const VariationalGroup& vg, std::size_t k,
                                   const Rational& tau, IntervalOwner owner) {
  const std::int64_t p = tau.numerator();
  const std::int64_t q = tau.denominator();
  // q * x = p * fixed - q * gaps; x >= 0 for any near-duplicate tuple.
  const std::int64_t slack = p * tuple_length(vg, k) - q * tuple_gap_sum(vg, k);
  return ExtendedInterval{q * vg.tuple_begin(k) - slack,
                          q * vg.tuple_end(k) + slack, owner};
}

namespace {

// Unbalanced insert sequences can build long chains; tear down without
// recursion.
template <typename NodePtr>
void destroy(NodePtr root) {
  std::vector<NodePtr> pending;
  if (root) pending.push_back(std::move(root));
  while (!pending.empty()) {
    NodePtr node = std::move(pending.back());
    pending.pop_back();
    if (node->left) pending.push_back(std::move(node->left));
    if (node->right) pending.push_back(std::move(node->right));
  }
}

}  // namespace

IntervalTree::IntervalTree() = default;
IntervalTree::~IntervalTree() { destroy(std::move(root_)); }
IntervalTree::IntervalTree(IntervalTree&&) noexcept = default;
IntervalTree& IntervalTree::operator=(IntervalTree&& other) noexcept {
  if (this != &other) {
    destroy(std::move(root_));
    root_ = std::move(other.root_);
    locations_ = std::move(other.locations_);
    size_ = other.size_;
    other.size_ = 0;
  }
  return *this;
}

void IntervalTree::record(Node* node, GroupRef group) {
  auto& nodes = locations_[group];
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end()) {
    nodes.push_back(node);
  }
}

std::unique_ptr<IntervalTree::Node> IntervalTree::build_node(
    std::vector<ExtendedInterval> items, IntervalTree& tree) {
  if (items.empty()) return nullptr;
  std::vector<std::int64_t> ends;
  ends.reserve(items.size() * 2);
  for (const auto& iv : items) {
    ends.push_back(iv.lo);
    ends.push_back(iv.hi);
  }
  auto mid = ends.begin() + static_cast<std::ptrdiff_t>(ends.size() / 2);
  std::nth_element(ends.begin(), mid, ends.end());

  auto node = std::make_unique<Node>();
  node->center = *mid;
  std::vector<ExtendedInterval> left, right;
  for (auto& iv : items) {
    if (iv.hi < node->center) {
      left.push_back(iv);
    } else if (iv.lo > node->center) {
      right.push_back(iv);
    } else {
      node->items.push_back(iv);
      tree.record(node.get(), iv.owner.group);
    }
  }
  node->left = build_node(std::move(left), tree);
  node->right = build_node(std::move(right), tree);
  return node;
}

IntervalTree IntervalTree::build(std::vector<ExtendedInterval> intervals) {
  IntervalTree tree;
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw UsageError("interval with lo > hi");
  }
  tree.size_ = intervals.size();
  tree.root_ = build_node(std::move(intervals), tree);
  return tree;
}

void IntervalTree::insert(const ExtendedInterval& interval) {
  if (interval.lo > interval.hi) throw UsageError("interval with lo > hi");
  std::unique_ptr<Node>* slot = &root_;
  while (*slot) {
    Node& node = **slot;
    if (interval.hi < node.center) {
      slot = &node.left;
    } else if (interval.lo > node.center) {
      slot = &node.right;
    } else {
      break;
    }
  }
  if (!*slot) {
    *slot = std::make_unique<Node>();
    (*slot)->center = std::midpoint(interval.lo, interval.hi);
  }
  (*slot)->items.push_back(interval);
  record(slot->get(), interval.owner.group);
  ++size_;
}

std::size_t IntervalTree::remove(GroupRef group) {
  auto it = locations_.find(group);
  if (it == locations_.end()) {
    std::clog << "docdup: warning: interval tree has no intervals for group "
              << group << "\n";
    return 0;
  }
  std::size_t removed = 0;
  for (Node* node : it->second) {
    removed += std::erase_if(node->items, [group](const ExtendedInterval& iv) {
      return iv.owner.group == group;
    });
  }
  locations_.erase(it);
  size_ -= removed;
  return removed;
}

std::vector<ExtendedInterval> IntervalTree::query(std::int64_t lo,
                                                  std::int64_t hi) const {
  std::vector<ExtendedInterval> found;
  if (lo > hi) return found;
  std::vector<const Node*> pending;
  if (root_) pending.push_back(root_.get());
  while (!pending.empty()) {
    const Node* node = pending.back();
    pending.pop_back();
    if (hi < node->center) {
      // Every stored interval reaches the center, past hi; only lo matters.
      for (const auto& iv : node->items) {
        if (iv.lo <= hi) found.push_back(iv);
      }
      if (node->left) pending.push_back(node->left.get());
    } else if (lo > node->center) {
      for (const auto& iv : node->items) {
        if (iv.hi >= lo) found.push_back(iv);
      }
      if (node->right) pending.push_back(node->right.get());
    } else {
      found.insert(found.end(), node->items.begin(), node->items.end());
      if (node->left) pending.push_back(node->left.get());
      if (node->right) pending.push_back(node->right.get());
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::size_t IntervalTree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<const Node*, std::size_t>> pending;
  if (root_) pending.emplace_back(root_.get(), 1);
  while (!pending.empty()) {
    auto [node, d] = pending.back();
    pending.pop_back();
    best = std::max(best, d);
    if (node->left) pending.emplace_back(node->left.get(), d + 1);
    if (node->right) pending.emplace_back(node->right.get(), d + 1);
  }
  return best;
}

IntervalTree initiate(std::span<const ExactGroup> groups, const Rational& tau) {
  std::vector<ExtendedInterval> intervals;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const VariationalGroup lifted(groups[i]);
    for (std::size_t k = 0; k < lifted.cardinality(); ++k) {
      intervals.push_back(extended_interval(
          lifted, k, tau, IntervalOwner{i, static_cast<std::uint32_t>(k)}));
    }
  }
  return IntervalTree::build(std::move(intervals));
}

}  // namespace docdup
