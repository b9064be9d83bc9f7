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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "docdup/exact_detector.hpp"
#include "docdup/interval_tree.hpp"
#include "docdup/merger.hpp"
#include "docdup/pipeline.hpp"
#include "docdup/utf8.hpp"
#include "fixtures.hpp"
#include "oracle/reference_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace docdup;

namespace {

// Pinned limits.
constexpr double kConformanceSeconds = 60.0;
constexpr double kTemplateSeconds = 1.0;
constexpr double kLargeSeconds = 30.0;
constexpr std::size_t kLargeBytes = 3 * 1024 * 1024;
constexpr std::size_t kManualBytes = 100 * 1024;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << title << ": "
            << o.detail << std::endl;
}

// --- independent re-check of emitted groups ------------------------------

bool separator(char32_t c) {
  static const std::u32string ascii = U".,;:!?()[]{}<>\"'`/\\|=+-*&^%$#@~";
  if (ascii.find(c) != std::u32string::npos) return true;
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f' || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 ||
         c == 0x202F || c == 0x205F || c == 0x3000;
}

std::vector<std::u32string> words(const std::u32string& text, Coord b, Coord e) {
  std::vector<std::u32string> out;
  std::u32string cur;
  for (Coord c = b; c <= e; ++c) {
    const char32_t ch = text[static_cast<std::size_t>(c - 1)];
    if (separator(ch)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Violations of the exact-group, variational-group and gap-budget rules,
// computed from raw coordinates and document text.
std::vector<std::string> recheck(const Document& doc, const VariationalGroup& vg,
                                 const Rational& tau) {
  std::vector<std::string> bad;
  const auto& text = doc.text;
  const auto n = static_cast<Coord>(text.size());
  const std::size_t arity = vg.arity();
  const std::size_t m = vg.part(0).occurrences().size();
  for (std::size_t i = 0; i < arity; ++i) {
    const auto occ = vg.part(i).occurrences();
    if (occ.size() < 2) bad.push_back("part with fewer than two occurrences");
    if (occ.size() != m) {
      bad.push_back("unequal cardinalities");
      return bad;
    }
    for (std::size_t a = 0; a < occ.size(); ++a) {
      if (occ[a].b() < 1 || occ[a].e() > n || occ[a].b() > occ[a].e()) {
        bad.push_back("fragment outside document");
        return bad;
      }
      // Fragments start and end on token boundaries.
      if (separator(text[occ[a].b() - 1]) || separator(text[occ[a].e() - 1]) ||
          (occ[a].b() > 1 && !separator(text[occ[a].b() - 2])) ||
          (occ[a].e() < n && !separator(text[occ[a].e()]))) {
        bad.push_back("fragment cuts a token");
      }
      if (words(text, occ[a].b(), occ[a].e()) != words(text, occ[0].b(), occ[0].e())) {
        bad.push_back("occurrences differ in text");
      }
      for (std::size_t c = a + 1; c < occ.size(); ++c) {
        if (occ[a].b() <= occ[c].e() && occ[c].b() <= occ[a].e()) {
          bad.push_back("overlapping occurrences");
        }
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    Coord gaps = 0;
    Coord fixed = 0;
    for (std::size_t i = 0; i < arity; ++i) {
      const auto& fi = vg.part(i).occurrences()[k];
      fixed += fi.e() - fi.b() + 1;
      for (std::size_t j = 0; j < arity; ++j) {
        const auto& fj = vg.part(j).occurrences()[k];
        if ((i < j) != (fi.e() < fj.b())) bad.push_back("tuple order broken");
      }
      if (i + 1 < arity) {
        const auto& next = vg.part(i + 1).occurrences()[k];
        Coord between = 0;
        for (Coord c = fi.e() + 1; c < next.b(); ++c) ++between;
        gaps += between + 2;
      }
    }
    if (k + 1 < m && !(vg.part(arity - 1).occurrences()[k].e() <
                       vg.part(0).occurrences()[k + 1].b())) {
      bad.push_back("tuples interleave");
    }
    if (tau.denominator() * gaps > tau.numerator() * fixed) bad.push_back("gap budget exceeded");
  }
  return bad;
}

// --- document builders -------------------------------------------------

// Up to four planted phrases laid out in tuples; fillers sometimes exceed
// the budget, tuples sometimes drop or swap a part.
std::string planted_document(std::mt19937& rng) {
  const std::size_t parts = 1 + rng() % 4;
  const std::size_t tuples = 2 + rng() % 3;
  std::vector<std::string> phrases;
  for (std::size_t i = 0; i < parts; ++i) {
    phrases.push_back(fixtures::phrase(fixtures::word("p", i) + "z", 5 + rng() % 8));
  }
  std::string text;
  std::size_t unique = 0;
  auto fresh = [&](std::size_t count) {
    std::string s;
    for (std::size_t j = 0; j < count; ++j) s += fixtures::word("u", unique++) + " ";
    return s;
  };
  for (std::size_t k = 0; k < tuples; ++k) {
    text += fresh(3) + ". ";
    std::vector<std::size_t> order(parts);
    for (std::size_t i = 0; i < parts; ++i) order[i] = i;
    if (parts > 1 && rng() % 6 == 0) std::swap(order[0], order[1]);
    for (std::size_t i : order) {
      if (rng() % 10 == 0) {
        text += fresh(3);
      } else {
        text += phrases[i] + " ";
      }
      text += fresh(rng() % 5 == 0 ? 6 + rng() % 6 : rng() % 3);
    }
    text += ".\n";
  }
  return text;
}

// Zipf-like prose over a large vocabulary with recurring boilerplate.
std::string large_document(std::size_t bytes) {
  std::mt19937 rng(2024);
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < 6000; ++i) vocab.push_back(fixtures::word("w", i));
  std::vector<double> weights;
  for (std::size_t i = 0; i < vocab.size(); ++i) weights.push_back(1.0 / double(i + 1));
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  const auto t = fixtures::planted_template(3, 1, 12, 1);
  std::string text;
  text.reserve(bytes + 4096);
  std::size_t paragraph = 0;
  while (text.size() < bytes) {
    if (paragraph++ % 25 == 0) {
      text += t.parts[0] + " v" + std::to_string(rng() % 100) + " " + t.parts[1] + " r" +
              std::to_string(rng() % 100) + " " + t.parts[2] + ".\n\n";
    }
    const std::size_t sentences = 3 + rng() % 5;
    for (std::size_t s = 0; s < sentences; ++s) {
      const std::size_t len = 6 + rng() % 15;
      for (std::size_t j = 0; j < len; ++j) {
        if (j) text += ' ';
        text += vocab[pick(rng)];
      }
      text += ". ";
    }
    text += "\n\n";
  }
  return text;
}

}  // namespace

int main() {
  const PipelineConfig defaults;

  report(1, "conformance on 1000 random documents", [&] {
    std::mt19937 rng(1);
    std::size_t groups = 0, multi = 0, violations = 0;
    std::string first;
    const auto start = Clock::now();
    for (int round = 0; round < 1000; ++round) {
      PipelineConfig cfg;
      cfg.detector.min_tokens = 2 + rng() % 4;
      const auto doc = load_document(fixtures::random_document(rng, 500), {});
      const auto r = analyze(doc, cfg);
      for (const auto& vg : r.groups) {
        ++groups;
        multi += vg.arity() > 1;
        for (const auto& v : recheck(doc, vg, cfg.threshold)) {
          if (violations++ == 0) first = v;
        }
      }
    }
    const double t = seconds_since(start);
    std::ostringstream d;
    d << groups << " groups (" << multi << " multi-part), " << violations
      << " violations, " << t << " s (limit " << kConformanceSeconds << " s)";
    if (!first.empty()) d << ", first: " << first;
    return Outcome{violations == 0 && multi > 0 && t < kConformanceSeconds, d.str()};
  });

  report(2, "detector matches brute force on 500 token sequences", [&] {
    std::mt19937 rng(2);
    std::size_t mismatches = 0, repeats = 0;
    for (int round = 0; round < 500; ++round) {
      const std::size_t n = 1 + rng() % 200;
      const TokenId alphabet = 1 + rng() % 8;
      std::vector<TokenId> ids(n);
      for (auto& id : ids) id = rng() % alphabet;
      DetectorConfig cfg;
      cfg.min_tokens = 1 + rng() % 5;
      cfg.min_group_size = 2 + rng() % 2;
      std::vector<oracle::Repeat> got;
      for (const auto& r : find_maximal_repeats(ids, cfg)) {
        got.push_back(oracle::Repeat{
            std::vector<TokenId>(ids.begin() + r.starts[0],
                                 ids.begin() + r.starts[0] + r.length),
            r.starts});
      }
      std::sort(got.begin(), got.end());
      const auto want = oracle::brute_force_repeats(ids, cfg.min_tokens, cfg.min_group_size);
      repeats += want.size();
      mismatches += got != want;
    }
    return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches over " +
                                        std::to_string(repeats) + " repeats"};
  });

  report(3, "merger matches the greedy trace on 200 planted documents", [&] {
    std::mt19937 rng(3);
    std::size_t mismatches = 0, merged = 0, oversized = 0;
    for (int round = 0; round < 200; ++round) {
      const auto doc = load_document(planted_document(rng), {});
      DetectorConfig cfg;
      const auto exact = detect_exact_groups(doc, Tokenizer().tokenize(doc), cfg);
      if (exact.size() > 4) ++oversized;
      const auto got = construct_near_duplicate_groups(exact);
      const auto want = oracle::greedy_trace(exact, default_threshold());
      mismatches += got != want;
      for (const auto& vg : got) merged += vg.arity() > 1;
    }
    return Outcome{mismatches == 0 && merged > 0,
                   std::to_string(mismatches) + " mismatches, " + std::to_string(merged) +
                       " merged groups, " + std::to_string(oversized) +
                       " documents where adjacent phrases fused into extra groups"};
  });

  report(4, "planted templates are recovered", [&] {
    std::size_t bad = 0;
    double slowest = 0;
    std::string first;
    for (std::size_t n = 2; n <= 5; ++n) {
      for (std::size_t m = 2; m <= 6; ++m) {
        const auto t = fixtures::planted_template(n, m);
        const auto start = Clock::now();
        const auto r = analyze(load_document(t.text, {}), defaults);
        slowest = std::max(slowest, seconds_since(start));
        bool ok = r.groups.size() == 1 && r.groups[0].extension_points() == n - 1 &&
                  r.groups[0].cardinality() == m;
        if (ok) {
          const auto values = extension_values(r.groups[0]);
          for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t i = 0; i + 1 < n; ++i) {
              const auto v = utf8::encode(r.document.slice(values[k][i].begin, values[k][i].end));
              ok = ok && v == " " + t.fillers[k][i] + " ";
            }
          }
        }
        if (!ok && bad++ == 0) first = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
    std::ostringstream d;
    d << 20 - bad << "/20 templates recovered, slowest " << slowest << " s (limit "
      << kTemplateSeconds << " s)";
    if (bad) d << ", first failure " << first;
    return Outcome{bad == 0 && slowest < kTemplateSeconds, d.str()};
  });

  report(5, "gap budget boundary is inclusive", [&] {
    auto frags = [](std::vector<std::pair<Coord, Coord>> spans) {
      std::vector<TextFragment> out;
      for (auto [b, e] : spans) out.emplace_back(b, e);
      return ExactGroup(std::move(out));
    };
    // 20 + 20 fixed symbols allow a distance of 6.
    const auto a = frags({{1, 20}, {101, 120}});
    const bool at = construct_near_duplicate_groups({a, frags({{25, 44}, {125, 144}})}).size() == 1;
    const bool over = construct_near_duplicate_groups({a, frags({{26, 45}, {125, 144}})}).size() == 2;

    // The same through text: " q1 " puts 4 symbols between the parts
    // (distance 6), " qa1 " puts 5 (distance 7).
    const std::string left = "aaaa bbbb cccc ddddd";
    const std::string right = "eeee ffff gggg hhhhh";
    auto doc = [&](const std::string& f1, const std::string& f2) {
      return "x1 wwww. " + left + " " + f1 + " " + right + ". y2 vvvv. " + left + " " + f2 +
             " " + right + ".\n";
    };
    PipelineConfig cfg;
    cfg.detector.min_tokens = 4;
    const auto r_at = analyze(load_document(doc("q1", "q2"), {}), cfg);
    const auto r_over = analyze(load_document(doc("qa1", "q2"), {}), cfg);
    const bool text_at = r_at.groups.size() == 1 && r_at.groups[0].arity() == 2 &&
                         length(r_at.groups[0]) == 80;
    const bool text_over = r_over.groups.size() == 2;
    return Outcome{at && over && text_at && text_over,
                   std::string("coordinates: equal ") + (at ? "merged" : "NOT merged") +
                       ", +1 " + (over ? "kept apart" : "MERGED") + "; text: equal " +
                       (text_at ? "merged" : "NOT merged") + ", +1 " +
                       (text_over ? "kept apart" : "MERGED")};
  });

  report(6, "\"FM registers\" is two tokens", [&] {
    const auto tokens = Tokenizer().tokenize(load_document("FM registers", {}));
    const bool ok = tokens.size() == 2 && tokens[0].text == U"FM" && tokens[0].begin == 1 &&
                    tokens[0].end == 2 && tokens[1].text == U"registers" &&
                    tokens[1].begin == 4 && tokens[1].end == 12;
    return Outcome{ok, std::to_string(tokens.size()) + " tokens"};
  });

  report(7, "interval tree matches a linear scan over 10000 operations", [&] {
    std::mt19937 rng(7);
    IntervalTree tree;
    std::vector<ExtendedInterval> all;
    std::size_t mismatches = 0, queries = 0;
    GroupRef next = 0;
    for (int op = 0; op < 10000; ++op) {
      const int kind = static_cast<int>(rng() % 3);
      if (kind == 0 || all.empty()) {
        const std::int64_t lo = static_cast<std::int64_t>(rng() % 100000) - 500;
        const ExtendedInterval iv{lo, lo + static_cast<std::int64_t>(rng() % 2000),
                                  IntervalOwner{next++ % 3000, static_cast<std::uint32_t>(rng() % 4)}};
        tree.insert(iv);
        all.push_back(iv);
      } else if (kind == 1) {
        const GroupRef g = all[rng() % all.size()].owner.group;
        const auto removed = tree.remove(g);
        const auto expected = std::erase_if(all, [g](const auto& iv) { return iv.owner.group == g; });
        mismatches += removed != expected;
      } else {
        const std::int64_t lo = static_cast<std::int64_t>(rng() % 100000) - 500;
        const std::int64_t hi = lo + static_cast<std::int64_t>(rng() % 3000);
        std::vector<ExtendedInterval> want;
        for (const auto& iv : all) {
          if (iv.intersects(lo, hi)) want.push_back(iv);
        }
        std::sort(want.begin(), want.end());
        ++queries;
        mismatches += tree.query(lo, hi) != want;
      }
      mismatches += tree.size() != all.size();
    }
    return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches, " +
                                        std::to_string(queries) + " queries"};
  });

  report(8, "3 MB document: deterministic json within the time limit", [&] {
    const auto text = large_document(kLargeBytes);
    const auto doc = load_document(text, {}, "large.txt");
    const auto start = Clock::now();
    const auto first = emit(analyze(doc, defaults), Format::json);
    const double t = seconds_since(start);
    const auto second = emit(analyze(doc, defaults), Format::json);
    const bool same = first == second;
    std::ostringstream d;
    d << text.size() << " bytes, " << t << " s (limit " << kLargeSeconds << " s), json "
      << (same ? "identical" : "DIFFERS") << " across runs";
    return Outcome{same && t < kLargeSeconds, d.str()};
  });

  report(9, "real manual: exact groups dominate, counts fall with arity", [&] {
    const std::string path = DOCDUP_MANUAL;
    PipelineConfig cfg;
    cfg.ingest.strip_markup = true;
    const auto doc = load_file(path, cfg.ingest);
    const auto bytes = std::filesystem::file_size(path);
    const auto r = analyze(doc, cfg);
    std::size_t top = 0;
    for (const auto& [points, count] : r.histogram) top = std::max(top, points);
    bool falling = true;
    std::ostringstream d;
    d << bytes << " bytes, histogram";
    for (std::size_t a = 0; a <= top; ++a) {
      const auto it = r.histogram.find(a);
      const std::size_t count = it == r.histogram.end() ? 0 : it->second;
      d << " " << a << ":" << count;
      if (a > 0) {
        const auto prev = r.histogram.find(a - 1);
        falling = falling && count <= (prev == r.histogram.end() ? 0 : prev->second);
      }
    }
    const std::size_t exact = r.histogram.contains(0) ? r.histogram.at(0) : 0;
    const bool dominated = 2 * exact > r.groups.size();
    return Outcome{bytes >= kManualBytes && dominated && falling && !r.groups.empty(), d.str()};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL")
            << std::endl;
  return failures;
}
