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

// Fragments, exact groups, variational groups and the near-duplicate
// criterion. Everything here is exact integer/rational arithmetic.

#include "docdup/ingest.hpp"
#include "docdup/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace docdup {

using DocId = std::uint32_t;

/// Closed interval [b, e] of symbol coordinates inside one document.
class TextFragment {
 public:
  /// Throws UsageError unless 1 <= b <= e.
  TextFragment(Coord b, Coord e, DocId doc = 0);

  Coord b() const { return b_; }
  Coord e() const { return e_; }
  DocId doc() const { return doc_; }
  Coord size() const { return e_ - b_ + 1; }

  bool intersects(const TextFragment& other) const {
    return b_ <= other.e_ && other.b_ <= e_;
  }
  /// Throws UsageError when e() exceeds the document length.
  void check_within(const Document& doc) const;

  friend bool operator==(const TextFragment&, const TextFragment&) = default;
  friend auto operator<=>(const TextFragment&, const TextFragment&) = default;

 private:
  Coord b_;
  Coord e_;
  DocId doc_;
};

/// Possibly empty interval; used for extension-point values.
struct Span {
  Coord begin = 1;
  Coord end = 0;
  bool empty() const { return end < begin; }
  Coord size() const { return empty() ? 0 : end - begin + 1; }
  friend bool operator==(const Span&, const Span&) = default;
};

/// Pairwise-disjoint occurrences of one repeated string, sorted by b.
class ExactGroup {
 public:
  /// Sorts the occurrences. Throws UsageError when fewer than two are
  /// given, when two intersect, or when they span documents.
  ExactGroup(std::vector<TextFragment> occurrences, std::u32string text = {});

  std::span<const TextFragment> occurrences() const { return occurrences_; }
  const TextFragment& operator[](std::size_t k) const { return occurrences_[k]; }
  std::size_t cardinality() const { return occurrences_.size(); }
  const std::u32string& text() const { return text_; }
  DocId doc() const { return occurrences_.front().doc(); }

  friend bool operator==(const ExactGroup&, const ExactGroup&) = default;

 private:
  std::vector<TextFragment> occurrences_;
  std::u32string text_;
};

/// Ordered tuple <G_1, ..., G_N> of equal-cardinality exact groups whose
/// occurrences interleave in document order.
class VariationalGroup {
 public:
  /// Lifts a single exact group.
  explicit VariationalGroup(ExactGroup group);
  /// Throws UsageError when `parts` is empty or not variational.
  explicit VariationalGroup(std::vector<ExactGroup> parts);

  std::span<const ExactGroup> parts() const { return parts_; }
  const ExactGroup& part(std::size_t i) const { return parts_[i]; }
  std::size_t arity() const { return parts_.size(); }
  std::size_t extension_points() const { return parts_.size() - 1; }
  std::size_t cardinality() const { return parts_.front().cardinality(); }

  /// g_i^k, 0-based in both indices.
  const TextFragment& fragment(std::size_t i, std::size_t k) const {
    return parts_[i][k];
  }
  Coord tuple_begin(std::size_t k) const { return parts_.front()[k].b(); }
  Coord tuple_end(std::size_t k) const { return parts_.back()[k].e(); }
  Coord first_begin() const { return tuple_begin(0); }

  friend bool operator==(const VariationalGroup&,
                         const VariationalGroup&) = default;

 private:
  std::vector<ExactGroup> parts_;
};

/// e1 < b2. Throws UsageError for fragments of different documents.
bool before(const TextFragment& g1, const TextFragment& g2);

/// 0 on intersection, otherwise b2 - e1 + 1 for the later fragment g2.
/// Adjacent fragments are at distance 2.
Coord distance(const TextFragment& g1, const TextFragment& g2);

/// Max over k of distance(g1^k, g2^k). Throws UsageError when the
/// cardinalities differ.
Coord distance(const ExactGroup& g1, const ExactGroup& g2);

/// Max distance over all part pairs. Throws UsageError when the
/// cardinalities differ.
Coord distance(const VariationalGroup& vg1, const VariationalGroup& vg2);

Coord length(const ExactGroup& group);
Coord length(const VariationalGroup& group);

/// Equal cardinalities, in-tuple order, and tuple k ending before
/// tuple k+1 starts.
bool is_variational(std::span<const ExactGroup> parts);

/// Sum of gap distances inside tuple k.
Coord tuple_gap_sum(const VariationalGroup& vg, std::size_t k);
/// Sum of part lengths inside tuple k.
Coord tuple_length(const VariationalGroup& vg, std::size_t k);

/// Whether tuple k satisfies gaps <= tau * fixed text.
bool tuple_within_budget(const VariationalGroup& vg, std::size_t k,
                         const Rational& tau);

/// Every tuple within budget. A lifted exact group always qualifies.
bool is_near_duplicate(const VariationalGroup& vg, const Rational& tau);

/// <vg1, vg2> when that concatenation is variational; nullopt otherwise.
std::optional<VariationalGroup> concatenate(const VariationalGroup& vg1,
                                            const VariationalGroup& vg2);

/// A variational group known to satisfy the near-duplicate criterion.
class NearDuplicateGroup {
 public:
  /// Throws UsageError when `group` exceeds the gap budget.
  NearDuplicateGroup(VariationalGroup group, Rational tau = default_threshold());

  const VariationalGroup& group() const { return group_; }
  const Rational& threshold() const { return tau_; }

 private:
  VariationalGroup group_;
  Rational tau_;
};

/// values[k][i] = [e_i^k + 1, b_{i+1}^k - 1]; N - 1 entries per tuple.
std::vector<std::vector<Span>> extension_values(const VariationalGroup& vg);
inline std::vector<std::vector<Span>> extension_values(
    const NearDuplicateGroup& nd) {
  return extension_values(nd.group());
}

/// Checks that every occurrence covers a whole-token run whose texts,
/// joined by single spaces, equal the group text. `tokens` must come from
/// `doc`.
bool occurrences_match_text(const Document& doc, std::span<const Token> tokens,
                            const ExactGroup& group);

/// Canonical group text for a token run.
std::u32string join_tokens(std::span<const Token> run);

}  // namespace docdup
