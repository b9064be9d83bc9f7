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

#include "docdup/merger.hpp"

#include "docdup/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace docdup {

namespace {

// Fragments in document order: tuple-major, part-minor.
std::vector<TextFragment> flatten(const VariationalGroup& vg) {
  std::vector<TextFragment> out;
  out.reserve(vg.arity() * vg.cardinality());
  for (std::size_t k = 0; k < vg.cardinality(); ++k) {
    for (std::size_t i = 0; i < vg.arity(); ++i) out.push_back(vg.fragment(i, k));
  }
  return out;
}

}  // namespace

bool canonical_less(const VariationalGroup& a, const VariationalGroup& b) {
  const auto fa = flatten(a);
  const auto fb = flatten(b);
  if (fa != fb) return fa < fb;
  // Same coordinates, different split into parts or texts.
  if (a.arity() != b.arity()) return a.arity() < b.arity();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.part(i).text() != b.part(i).text()) return a.part(i).text() < b.part(i).text();
  }
  return false;
}

MergeState::MergeState(std::vector<ExactGroup> set_g, Rational tau) : tau_(tau) {
  if (tau_ < 0) throw UsageError("threshold must be non-negative");
  std::vector<VariationalGroup> lifted;
  lifted.reserve(set_g.size());
  for (auto& g : set_g) lifted.emplace_back(std::move(g));
  std::sort(lifted.begin(), lifted.end(), canonical_less);
  exact_count_ = lifted.size();
  for (auto& vg : lifted) live_.emplace(next_id_++, std::move(vg));

  std::vector<ExtendedInterval> intervals;
  for (const auto& [id, vg] : live_) {
    for (std::size_t k = 0; k < vg.cardinality(); ++k) {
      intervals.push_back(extended_interval(
          vg, k, tau_, IntervalOwner{id, static_cast<std::uint32_t>(k)}));
    }
  }
  tree_ = IntervalTree::build(std::move(intervals));
}

const VariationalGroup& MergeState::group(GroupRef id) const {
  auto it = live_.find(id);
  if (it == live_.end()) throw UsageError("group " + std::to_string(id) + " is not live");
  return it->second;
}

void MergeState::add_intervals(GroupRef id) {
  const auto& vg = live_.at(id);
  for (std::size_t k = 0; k < vg.cardinality(); ++k) {
    tree_.insert(extended_interval(vg, k, tau_,
                                   IntervalOwner{id, static_cast<std::uint32_t>(k)}));
  }
}

std::vector<GroupRef> MergeState::nearby(GroupRef id) const {
  const VariationalGroup& g = group(id);
  const std::size_t m = g.cardinality();

  std::vector<ExtendedInterval> own(m);
  for (std::size_t k = 0; k < m; ++k) own[k] = extended_interval(g, k, tau_);

  // Groups with at least one widened tuple meeting one of ours.
  std::set<GroupRef> touching;
  for (const auto& probe : own) {
    for (const auto& hit : tree_.query(probe)) {
      if (hit.owner.group != id) touching.insert(hit.owner.group);
    }
  }

  std::vector<GroupRef> result;
  for (GroupRef other_id : touching) {
    const VariationalGroup& other = live_.at(other_id);
    if (other.cardinality() != m) continue;
    // Both orders cannot be variational at once.
    auto joined = concatenate(g, other);
    if (!joined) joined = concatenate(other, g);
    if (!joined) continue;
    bool all_close = true;
    for (std::size_t k = 0; k < m && all_close; ++k) {
      all_close = own[k].intersects(extended_interval(other, k, tau_));
    }
    // The widened-interval test is necessary but not sufficient; confirm
    // the budget on the actual concatenation.
    if (all_close && is_near_duplicate(*joined, tau_)) result.push_back(other_id);
  }
  return result;
}

GroupRef MergeState::closest(GroupRef id, std::span<const GroupRef> candidates) const {
  if (candidates.empty()) throw UsageError("closest() needs at least one candidate");
  const VariationalGroup& g = group(id);
  GroupRef best = candidates.front();
  auto best_key = std::tuple(distance(g, group(best)), group(best).first_begin(), best);
  for (GroupRef c : candidates.subspan(1)) {
    auto key = std::tuple(distance(g, group(c)), group(c).first_begin(), c);
    if (key < best_key) {
      best = c;
      best_key = key;
    }
  }
  return best;
}

std::vector<GroupRef> MergeState::snapshot() const {
  std::vector<GroupRef> ids;
  ids.reserve(live_.size());
  for (const auto& [id, vg] : live_) ids.push_back(id);
  std::sort(ids.begin(), ids.end(), [this](GroupRef a, GroupRef b) {
    const Coord ba = live_.at(a).first_begin();
    const Coord bb = live_.at(b).first_begin();
    return ba != bb ? ba < bb : a < b;
  });
  return ids;
}

std::vector<GroupRef> MergeState::merge_pass() {
  ++passes_;
  std::vector<std::pair<GroupRef, VariationalGroup>> fresh;
  for (GroupRef id : snapshot()) {
    if (!live_.contains(id)) continue;  // consumed earlier in this pass
    const auto candidates = nearby(id);
    if (candidates.empty()) continue;
    const GroupRef partner = closest(id, candidates);

    const VariationalGroup& g = live_.at(id);
    const VariationalGroup& p = live_.at(partner);
    auto joined = before(g.fragment(0, 0), p.fragment(0, 0)) ? concatenate(g, p)
                                                             : concatenate(p, g);
    if (!joined) {
      throw InvariantError("nearby group does not concatenate in document order");
    }
    const GroupRef result = next_id_++;
    trace_.push_back(MergeStep{passes_, id, partner, result});
    fresh.emplace_back(result, std::move(*joined));

    tree_.remove(id);
    tree_.remove(partner);
    live_.erase(id);
    live_.erase(partner);
  }

  // Join: new groups become live and queryable only now.
  std::vector<GroupRef> created;
  created.reserve(fresh.size());
  for (auto& [id, vg] : fresh) {
    live_.emplace(id, std::move(vg));
    add_intervals(id);
    created.push_back(id);
  }
  return created;
}

std::vector<VariationalGroup> MergeState::run() {
  while (!merge_pass().empty()) {
  }
  std::vector<VariationalGroup> out;
  out.reserve(live_.size());
  for (const auto& [id, vg] : live_) out.push_back(vg);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroupRef> MergeState::unmerged_exact() const {
  std::vector<GroupRef> ids;
  for (const auto& [id, vg] : live_) {
    if (id < exact_count_) ids.push_back(id);
  }
  return ids;
}

std::vector<GroupRef> MergeState::merged() const {
  std::vector<GroupRef> ids;
  for (const auto& [id, vg] : live_) {
    if (id >= exact_count_) ids.push_back(id);
  }
  return ids;
}

std::vector<VariationalGroup> construct_near_duplicate_groups(
    std::vector<ExactGroup> set_g, const Rational& tau) {
  return MergeState(std::move(set_g), tau).run();
}

}  // namespace docdup
