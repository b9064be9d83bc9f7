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

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace docdup {

using Rational = boost::rational<std::int64_t>;

/// Merge threshold used throughout: fixed-text budget for variable gaps.
inline Rational default_threshold() { return Rational(3, 20); }

/// "p/q" with p >= 0 and 0 < q <= 10^6 (a bare integer means q = 1).
/// Throws UsageError otherwise.
Rational parse_rational(std::string_view text);

/// Always "p/q" in lowest terms, so zero prints as "0/1".
std::string format_rational(const Rational& r);

}  // namespace docdup
