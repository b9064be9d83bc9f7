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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace docdup {

/// Symbol coordinate. 1-based, counts unicode scalar values.
using Coord = std::int64_t;

struct IngestOptions {
  /// Replace `<...>` tags with spaces of equal symbol length.
  bool strip_markup = false;
  /// When set, replaces the default separator set entirely.
  std::optional<std::u32string> separators;
};

/// Immutable after construction. Symbol `i` (1-based) is `text[i - 1]`.
struct Document {
  std::string id;
  std::u32string text;

  Coord length() const { return static_cast<Coord>(text.size()); }

  /// Symbols in [begin, end]; empty when end < begin.
  std::u32string_view slice(Coord begin, Coord end) const;
};

struct Token {
  std::u32string text;
  Coord begin = 0;
  Coord end = 0;
  std::size_t index = 0;
};

/// Whitespace plus ASCII punctuation used when no override is given.
bool is_default_separator(char32_t c);

class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(std::optional<std::u32string> separators);

  bool is_separator(char32_t c) const;
  std::vector<Token> tokenize(const Document& doc) const;

 private:
  std::optional<std::u32string> separators_;
};

/// Decodes UTF-8, normalizes CR LF to LF, optionally strips markup.
/// Throws InputError on malformed UTF-8.
Document load_document(std::string_view source, const IngestOptions& options,
                       std::string id = {});

/// Reads the whole file. Throws InputError when it cannot be opened.
Document load_file(const std::string& path, const IngestOptions& options);

std::vector<Token> tokenize(const Document& doc,
                            const IngestOptions& options = {});

}  // namespace docdup
