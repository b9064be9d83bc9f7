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

// Synthetic documents shared by the unit and acceptance suites.

#include "docdup/core_model.hpp"
#include "docdup/ingest.hpp"

#include <algorithm>

#include <random>
#include <string>
#include <vector>

namespace docdup::fixtures {

/// Distinct lowercase word per (prefix, n), e.g. "pa3b".
inline std::string word(std::string_view prefix, std::size_t n) {
  std::string w(prefix);
  do {
    w.push_back(static_cast<char>('a' + n % 26));
    n /= 26;
  } while (n > 0);
  return w;
}

/// `count` distinct words joined by single spaces.
inline std::string phrase(std::string_view prefix, std::size_t count) {
  std::string out;
  for (std::size_t j = 0; j < count; ++j) {
    if (j) out += ' ';
    out += word(prefix, j);
  }
  return out;
}

/// Tuples of `parts` fixed phrases separated by per-tuple filler words,
/// each tuple surrounded by unique background text.
struct Template {
  std::string text;
  std::vector<std::string> parts;
  /// fillers[k][i]: text between part i and i+1 in tuple k.
  std::vector<std::vector<std::string>> fillers;
};

inline Template planted_template(std::size_t parts, std::size_t tuples,
                                 std::size_t part_tokens = 20,
                                 std::size_t filler_tokens = 1) {
  Template t;
  for (std::size_t i = 0; i < parts; ++i) {
    t.parts.push_back(phrase(word("p", i) + "w", part_tokens));
  }
  for (std::size_t k = 0; k < tuples; ++k) {
    t.text += phrase(word("bg", k) + "x", 6) + ". ";
    std::vector<std::string> fill;
    for (std::size_t i = 0; i < parts; ++i) {
      if (i) {
        fill.push_back(phrase(word("f", k) + word("v", i) + "q", filler_tokens));
        t.text += " " + fill.back() + " ";
      }
      t.text += t.parts[i];
    }
    t.text += ".\n";
    t.fillers.push_back(std::move(fill));
  }
  t.text += phrase("tail", 6) + ".\n";
  return t;
}

/// Up to `max_tokens` words from a small vocabulary with a few planted
/// repeated sentences, some carrying varying inserted words.
inline std::string random_document(std::mt19937& rng, std::size_t max_tokens) {
  static const std::vector<std::string> vocab{
      "the",  "driver", "port", "daemon", "listens", "on",     "FM",
      "bit",  "set",    "when", "mode",   "is",      "active", "see",
      "page", "table",  "note", "value",  "reg",     "clock",  "and"};
  std::vector<std::string> sentences;
  const std::size_t planted = 1 + rng() % 3;
  for (std::size_t s = 0; s < planted; ++s) {
    std::string sentence;
    const std::size_t len = 4 + rng() % 12;
    for (std::size_t j = 0; j < len; ++j) {
      sentence += vocab[rng() % vocab.size()] + " ";
    }
    sentences.push_back(sentence);
  }
  std::string text;
  std::size_t tokens = 0;
  // Planted sentences overshoot by at most 17 tokens.
  const std::size_t target = 1 + rng() % (max_tokens - 20);
  while (tokens < target) {
    if (rng() % 3 == 0) {
      std::string s = sentences[rng() % sentences.size()];
      if (rng() % 2 == 0) {
        // Insert a varying word somewhere in the middle.
        const auto cut = s.find(' ', s.size() / 2);
        if (cut != std::string::npos) s.insert(cut + 1, word("var", rng() % 50) + " ");
      }
      text += s;
      tokens += static_cast<std::size_t>(std::count(s.begin(), s.end(), ' '));
    } else {
      text += vocab[rng() % vocab.size()];
      text += (rng() % 7 == 0) ? ". " : " ";
      ++tokens;
    }
  }
  return text;
}

/// Coordinates only: up to `max_parts` exact groups laid out as tuples,
/// usually in a consistent order with small gaps, sometimes swapped, far
/// apart, or missing an occurrence.
inline std::vector<ExactGroup> random_layout(std::mt19937& rng, std::size_t max_parts = 4) {
  const std::size_t parts = 1 + rng() % max_parts;
  const std::size_t tuples = 2 + rng() % 3;
  std::vector<Coord> part_len(parts);
  for (auto& len : part_len) len = 5 + rng() % 30;
  std::vector<std::vector<TextFragment>> occ(parts);
  Coord pos = 1 + rng() % 10;
  for (std::size_t k = 0; k < tuples; ++k) {
    std::vector<std::size_t> order(parts);
    for (std::size_t i = 0; i < parts; ++i) order[i] = i;
    if (parts > 1 && rng() % 6 == 0) std::swap(order[0], order[1]);
    for (std::size_t i : order) {
      occ[i].emplace_back(pos, pos + part_len[i] - 1);
      pos += part_len[i];
      pos += (rng() % 5 == 0) ? 10 + rng() % 30 : rng() % 8;
    }
    pos += 20 + rng() % 80;
  }
  std::vector<ExactGroup> groups;
  for (auto& o : occ) {
    if (o.size() > 2 && rng() % 8 == 0) o.erase(o.begin() + rng() % o.size());
    groups.emplace_back(std::move(o));
  }
  return groups;
}

}  // namespace docdup::fixtures
