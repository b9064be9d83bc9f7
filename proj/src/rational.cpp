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

#include "docdup/rational.hpp"

#include "docdup/error.hpp"

#include <charconv>

namespace docdup {

namespace {

std::int64_t parse_part(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw UsageError("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_part(text.substr(0, slash), text);
  const std::int64_t den =
      slash == std::string_view::npos ? 1 : parse_part(text.substr(slash + 1), text);
  constexpr std::int64_t kMax = 1'000'000;
  if (num < 0 || den <= 0 || num > kMax || den > kMax) {
    throw UsageError("rational '" + std::string(text) +
                     "' must be p/q with 0 <= p and 0 < q <= 1000000");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace docdup
