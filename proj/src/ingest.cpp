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

#include "docdup/ingest.hpp"

#include "docdup/error.hpp"
#include "docdup/utf8.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace docdup {

namespace {

bool is_unicode_space(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

constexpr std::u32string_view kPunctuation = U".,;:!?()[]{}<>\"'`/\\|=+-*&^%$#@~";

std::u32string normalize_newlines(std::u32string text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'\r' && i + 1 < text.size() && text[i + 1] == U'\n') continue;
    out.push_back(text[i]);
  }
  return out;
}

bool opens_tag(const std::u32string& text, std::size_t i) {
  if (text[i] != U'<' || i + 1 >= text.size()) return false;
  const char32_t next = text[i + 1];
  return next == U'/' || next == U'!' || next == U'?' ||
         (next >= U'a' && next <= U'z') || (next >= U'A' && next <= U'Z');
}

// Tags become runs of spaces so every surviving symbol keeps its
// coordinate. Newlines inside a tag are kept for line-oriented viewers.
void strip_markup(std::u32string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    if (!opens_tag(text, i)) {
      ++i;
      continue;
    }
    const std::size_t close = text.find(U'>', i + 1);
    if (close == std::u32string::npos) break;
    for (std::size_t j = i; j <= close; ++j) {
      if (text[j] != U'\n') text[j] = U' ';
    }
    i = close + 1;
  }
}

}  // namespace

std::u32string_view Document::slice(Coord begin, Coord end) const {
  if (end < begin) return {};
  return std::u32string_view(text).substr(static_cast<std::size_t>(begin - 1),
                                          static_cast<std::size_t>(end - begin + 1));
}

bool is_default_separator(char32_t c) {
  return is_unicode_space(c) || kPunctuation.find(c) != std::u32string_view::npos;
}

Tokenizer::Tokenizer(std::optional<std::u32string> separators)
    : separators_(std::move(separators)) {}

bool Tokenizer::is_separator(char32_t c) const {
  if (separators_) return separators_->find(c) != std::u32string::npos;
  return is_default_separator(c);
}

std::vector<Token> Tokenizer::tokenize(const Document& doc) const {
  std::vector<Token> tokens;
  const auto& text = doc.text;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    Token tok;
    tok.text = text.substr(i, j - i);
    tok.begin = static_cast<Coord>(i) + 1;
    tok.end = static_cast<Coord>(j);
    tok.index = tokens.size();
    tokens.push_back(std::move(tok));
    i = j;
  }
  return tokens;
}

Document load_document(std::string_view source, const IngestOptions& options,
                       std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.text = normalize_newlines(utf8::decode(source));
  if (options.strip_markup) strip_markup(doc.text);
  return doc;
}

Document load_file(const std::string& path, const IngestOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw InputError("cannot open " + path + ": not a regular file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("read failed for " + path);
  return load_document(buf.str(), options, path);
}

std::vector<Token> tokenize(const Document& doc, const IngestOptions& options) {
  return Tokenizer(options.separators).tokenize(doc);
}

}  // namespace docdup
