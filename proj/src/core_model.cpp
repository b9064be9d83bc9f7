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

#include "docdup/core_model.hpp"

#include "docdup/error.hpp"

#include <algorithm>
#include <string>

namespace docdup {

TextFragment::TextFragment(Coord b, Coord e, DocId doc) : b_(b), e_(e), doc_(doc) {
  if (b < 1 || e < b) {
    throw UsageError("fragment [" + std::to_string(b) + ", " + std::to_string(e) +
                     "] is not a non-empty interval within [1, length]");
  }
}

void TextFragment::check_within(const Document& doc) const {
  if (e_ > doc.length()) {
    throw UsageError("fragment end " + std::to_string(e_) +
                     " exceeds document length " + std::to_string(doc.length()));
  }
}

ExactGroup::ExactGroup(std::vector<TextFragment> occurrences, std::u32string text)
    : occurrences_(std::move(occurrences)), text_(std::move(text)) {
  if (occurrences_.size() < 2) {
    throw UsageError("an exact group needs at least two occurrences");
  }
  std::sort(occurrences_.begin(), occurrences_.end());
  for (std::size_t k = 1; k < occurrences_.size(); ++k) {
    if (occurrences_[k].doc() != occurrences_[0].doc()) {
      throw UsageError("exact group occurrences span documents");
    }
    if (occurrences_[k - 1].intersects(occurrences_[k])) {
      throw UsageError("exact group occurrences overlap");
    }
  }
}

VariationalGroup::VariationalGroup(ExactGroup group) {
  parts_.push_back(std::move(group));
}

VariationalGroup::VariationalGroup(std::vector<ExactGroup> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("variational group without parts");
  if (!is_variational(parts_)) {
    throw UsageError("parts do not form a variational group");
  }
}

bool before(const TextFragment& g1, const TextFragment& g2) {
  if (g1.doc() != g2.doc()) {
    throw UsageError("Before() on fragments of different documents");
  }
  return g1.e() < g2.b();
}

Coord distance(const TextFragment& g1, const TextFragment& g2) {
  if (before(g1, g2)) return g2.b() - g1.e() + 1;
  if (before(g2, g1)) return g1.b() - g2.e() + 1;
  return 0;
}

Coord distance(const ExactGroup& g1, const ExactGroup& g2) {
  if (g1.cardinality() != g2.cardinality()) {
    throw UsageError("group distance needs equal cardinalities (" +
                     std::to_string(g1.cardinality()) + " vs " +
                     std::to_string(g2.cardinality()) + ")");
  }
  Coord best = 0;
  for (std::size_t k = 0; k < g1.cardinality(); ++k) {
    best = std::max(best, distance(g1[k], g2[k]));
  }
  return best;
}

Coord distance(const VariationalGroup& vg1, const VariationalGroup& vg2) {
  Coord best = 0;
  for (const auto& a : vg1.parts()) {
    for (const auto& b : vg2.parts()) best = std::max(best, distance(a, b));
  }
  return best;
}

Coord length(const ExactGroup& group) {
  Coord total = 0;
  for (const auto& g : group.occurrences()) total += g.size();
  return total;
}

Coord length(const VariationalGroup& group) {
  Coord total = 0;
  for (const auto& part : group.parts()) total += length(part);
  return total;
}

bool is_variational(std::span<const ExactGroup> parts) {
  if (parts.empty()) return false;
  const std::size_t m = parts.front().cardinality();
  const DocId doc = parts.front().doc();
  for (const auto& part : parts) {
    if (part.cardinality() != m || part.doc() != doc) return false;
  }
  // Before is transitive, so consecutive checks cover every i < j.
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      if (!before(parts[i][k], parts[i + 1][k])) return false;
    }
    if (k + 1 < m && !before(parts.back()[k], parts.front()[k + 1])) return false;
  }
  return true;
}

Coord tuple_gap_sum(const VariationalGroup& vg, std::size_t k) {
  Coord total = 0;
  for (std::size_t i = 0; i + 1 < vg.arity(); ++i) {
    total += distance(vg.fragment(i, k), vg.fragment(i + 1, k));
  }
  return total;
}

Coord tuple_length(const VariationalGroup& vg, std::size_t k) {
  Coord total = 0;
  for (std::size_t i = 0; i < vg.arity(); ++i) total += vg.fragment(i, k).size();
  return total;
}

bool tuple_within_budget(const VariationalGroup& vg, std::size_t k,
                         const Rational& tau) {
  // gaps <= (p/q) * fixed  <=>  q * gaps <= p * fixed
  return tau.denominator() * tuple_gap_sum(vg, k) <=
         tau.numerator() * tuple_length(vg, k);
}

bool is_near_duplicate(const VariationalGroup& vg, const Rational& tau) {
  for (std::size_t k = 0; k < vg.cardinality(); ++k) {
    if (!tuple_within_budget(vg, k, tau)) return false;
  }
  return true;
}

std::optional<VariationalGroup> concatenate(const VariationalGroup& vg1,
                                            const VariationalGroup& vg2) {
  std::vector<ExactGroup> parts(vg1.parts().begin(), vg1.parts().end());
  parts.insert(parts.end(), vg2.parts().begin(), vg2.parts().end());
  if (!is_variational(parts)) return std::nullopt;
  return VariationalGroup(std::move(parts));
}

NearDuplicateGroup::NearDuplicateGroup(VariationalGroup group, Rational tau)
    : group_(std::move(group)), tau_(tau) {
  if (!is_near_duplicate(group_, tau_)) {
    throw UsageError("variational group exceeds the gap budget " +
                     format_rational(tau_));
  }
}

std::vector<std::vector<Span>> extension_values(const VariationalGroup& vg) {
  std::vector<std::vector<Span>> values(vg.cardinality());
  for (std::size_t k = 0; k < vg.cardinality(); ++k) {
    values[k].reserve(vg.extension_points());
    for (std::size_t i = 0; i + 1 < vg.arity(); ++i) {
      values[k].push_back(
          Span{vg.fragment(i, k).e() + 1, vg.fragment(i + 1, k).b() - 1});
    }
  }
  return values;
}

std::u32string join_tokens(std::span<const Token> run) {
  std::u32string out;
  for (const auto& tok : run) {
    if (!out.empty()) out.push_back(U' ');
    out += tok.text;
  }
  return out;
}

bool occurrences_match_text(const Document& doc, std::span<const Token> tokens,
                            const ExactGroup& group) {
  for (const auto& g : group.occurrences()) {
    if (g.e() > doc.length()) return false;
    auto first = std::lower_bound(
        tokens.begin(), tokens.end(), g.b(),
        [](const Token& t, Coord b) { return t.begin < b; });
    if (first == tokens.end() || first->begin != g.b()) return false;
    auto last = first;
    while (last != tokens.end() && last->end < g.e()) ++last;
    if (last == tokens.end() || last->end != g.e()) return false;
    if (join_tokens(std::span(first, last + 1)) != group.text()) return false;
    for (auto it = first; it != last + 1; ++it) {
      if (doc.slice(it->begin, it->end) != it->text) return false;
    }
  }
  return true;
}

}  // namespace docdup
