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

#include "docdup/report.hpp"

#include "docdup/error.hpp"
#include "docdup/utf8.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace docdup {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string percent_string(std::size_t count, std::size_t total) {
  // Hundredths of a percent, rounded half up, in integers.
  const std::uint64_t hundredths =
      (static_cast<std::uint64_t>(count) * 20000 + total) / (2 * total);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%02llu",
                static_cast<unsigned long long>(hundredths / 100),
                static_cast<unsigned long long>(hundredths % 100));
  return buf;
}

std::string quote(const Document& doc, Coord b, Coord e) {
  return utf8::encode(doc.slice(b, e));
}

ordered_json fragment_json(const Document& doc, Coord b, Coord e) {
  ordered_json j;
  j["begin"] = b;
  j["end"] = e;
  j["text"] = quote(doc, b, e);
  return j;
}

std::string shorten(std::string_view text, std::size_t limit) {
  std::string flat;
  for (char c : text) flat.push_back(c == '\n' || c == '\t' ? ' ' : c);
  if (flat.size() <= limit) return flat;
  // Back off to a code point boundary.
  std::size_t cut = limit;
  while (cut > 0 && (static_cast<unsigned char>(flat[cut]) & 0xC0) == 0x80) --cut;
  return flat.substr(0, cut) + "...";
}

void html_escape(std::string& out, char32_t c) {
  switch (c) {
    case U'&': out += "&amp;"; break;
    case U'<': out += "&lt;"; break;
    case U'>': out += "&gt;"; break;
    case U'"': out += "&quot;"; break;
    default: utf8::append(out, c);
  }
}

}  // namespace

ArityHistogram compute_histogram(std::span<const VariationalGroup> groups) {
  ArityHistogram histogram;
  for (const auto& g : groups) ++histogram[g.extension_points()];
  return histogram;
}

Rational compute_coverage(const Document& doc,
                          std::span<const VariationalGroup> groups) {
  if (doc.length() == 0) return Rational(0);
  std::vector<std::pair<Coord, Coord>> spans;
  for (const auto& vg : groups) {
    for (const auto& part : vg.parts()) {
      for (const auto& g : part.occurrences()) spans.emplace_back(g.b(), g.e());
    }
  }
  std::sort(spans.begin(), spans.end());
  Coord covered = 0;
  Coord reach = 0;  // last covered coordinate so far
  for (const auto& [b, e] : spans) {
    if (e <= reach) continue;
    covered += e - std::max(b, reach + 1) + 1;
    reach = e;
  }
  return Rational(covered, doc.length());
}

std::string group_id(const VariationalGroup& group) {
  std::vector<std::pair<Coord, Coord>> coords;
  for (const auto& part : group.parts()) {
    for (const auto& g : part.occurrences()) coords.emplace_back(g.b(), g.e());
  }
  std::sort(coords.begin(), coords.end());
  std::uint64_t hash = 0xcbf29ce484222325ull;  // FNV-1a 64
  auto feed = [&hash](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (v >> (8 * byte)) & 0xFF;
      hash *= 0x100000001b3ull;
    }
  };
  for (const auto& [b, e] : coords) {
    feed(static_cast<std::uint64_t>(b));
    feed(static_cast<std::uint64_t>(e));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  if (name == "html") return Format::html;
  throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string_view extension(Format format) {
  switch (format) {
    case Format::json: return "json";
    case Format::text: return "txt";
    case Format::html: return "html";
  }
  return "json";
}

nlohmann::ordered_json to_json(const Report& report) {
  const Document& doc = report.document;
  ordered_json header;
  header["document"] = doc.id;
  header["length"] = doc.length();
  header["tokens"] = report.token_count;
  ordered_json config;
  config["min_tokens"] = report.config.detector.min_tokens;
  config["min_group"] = report.config.detector.min_group_size;
  config["threshold"] = format_rational(report.config.threshold);
  config["strip_markup"] = report.config.ingest.strip_markup;
  if (report.config.ingest.separators) {
    config["separators"] = utf8::encode(*report.config.ingest.separators);
  } else {
    config["separators"] = nullptr;
  }
  header["config"] = std::move(config);
  header["exact_groups_detected"] = report.exact_group_count;

  ordered_json groups = ordered_json::array();
  for (const auto& vg : report.groups) {
    ordered_json g;
    g["id"] = group_id(vg);
    g["parts"] = vg.arity();
    g["extension_points"] = vg.extension_points();
    g["cardinality"] = vg.cardinality();
    g["length"] = length(vg);
    ordered_json texts = ordered_json::array();
    for (const auto& part : vg.parts()) texts.push_back(utf8::encode(part.text()));
    g["texts"] = std::move(texts);
    const auto values = extension_values(vg);
    ordered_json tuples = ordered_json::array();
    for (std::size_t k = 0; k < vg.cardinality(); ++k) {
      ordered_json tuple;
      ordered_json frags = ordered_json::array();
      for (std::size_t i = 0; i < vg.arity(); ++i) {
        const auto& f = vg.fragment(i, k);
        frags.push_back(fragment_json(doc, f.b(), f.e()));
      }
      tuple["fragments"] = std::move(frags);
      ordered_json ext = ordered_json::array();
      for (const auto& v : values[k]) ext.push_back(fragment_json(doc, v.begin, v.end));
      tuple["extension_values"] = std::move(ext);
      tuples.push_back(std::move(tuple));
    }
    g["tuples"] = std::move(tuples);
    groups.push_back(std::move(g));
  }

  ordered_json histogram = ordered_json::array();
  for (const auto& [points, count] : report.histogram) {
    ordered_json bin;
    bin["extension_points"] = points;
    bin["groups"] = count;
    bin["share"] = format_rational(Rational(static_cast<std::int64_t>(count),
                                            static_cast<std::int64_t>(report.groups.size())));
    bin["percent"] = percent_string(count, report.groups.size());
    histogram.push_back(std::move(bin));
  }

  ordered_json out;
  out[std::string(kReportSchema)] = std::move(header);
  out["groups"] = std::move(groups);
  out["histogram"] = std::move(histogram);
  out["coverage"] = format_rational(report.coverage);
  return out;
}

std::vector<VariationalGroup> groups_from_json(const nlohmann::json& report) {
  if (!report.is_object() || !report.contains(kReportSchema)) {
    throw InputError("not a docdup_report_v1 report");
  }
  std::vector<VariationalGroup> groups;
  try {
    for (const auto& g : report.at("groups")) {
      const auto& tuples = g.at("tuples");
      const std::size_t arity = g.at("parts").get<std::size_t>();
      std::vector<std::vector<TextFragment>> occ(arity);
      for (const auto& tuple : tuples) {
        const auto& frags = tuple.at("fragments");
        if (frags.size() != arity) throw InputError("tuple arity mismatch");
        for (std::size_t i = 0; i < arity; ++i) {
          occ[i].emplace_back(frags[i].at("begin").get<Coord>(),
                              frags[i].at("end").get<Coord>());
        }
      }
      std::vector<ExactGroup> parts;
      for (std::size_t i = 0; i < arity; ++i) {
        parts.emplace_back(std::move(occ[i]),
                           utf8::decode(g.at("texts").at(i).get<std::string>()));
      }
      groups.emplace_back(std::move(parts));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const UsageError& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return groups;
}

std::string emit_text(const Report& report) {
  const Document& doc = report.document;
  std::ostringstream out;
  out << "document: " << doc.id << "\n";
  out << "symbols: " << doc.length() << ", tokens: " << report.token_count
      << ", exact groups detected: " << report.exact_group_count << "\n";
  out << "threshold: " << format_rational(report.config.threshold)
      << ", min tokens: " << report.config.detector.min_tokens
      << ", min group: " << report.config.detector.min_group_size << "\n";
  out << "groups: " << report.groups.size() << ", coverage: "
      << format_rational(report.coverage) << " ("
      << percent_string(static_cast<std::size_t>(report.coverage.numerator()),
                        static_cast<std::size_t>(report.coverage.denominator()))
      << "%)\n";
  out << "extension points histogram:\n";
  for (const auto& [points, count] : report.histogram) {
    out << "  " << points << ": " << count << " ("
        << percent_string(count, report.groups.size()) << "%)\n";
  }
  for (const auto& vg : report.groups) {
    out << "\ngroup " << group_id(vg) << ": " << vg.arity() << " part(s), "
        << vg.cardinality() << " tuples, " << vg.extension_points()
        << " extension point(s)\n";
    const auto values = extension_values(vg);
    for (std::size_t k = 0; k < vg.cardinality(); ++k) {
      out << "  [" << vg.tuple_begin(k) << ", " << vg.tuple_end(k) << "] "
          << shorten(quote(doc, vg.tuple_begin(k), vg.tuple_end(k)), 72) << "\n";
      for (const auto& v : values[k]) {
        out << "      ext: \"" << shorten(quote(doc, v.begin, v.end), 40) << "\"\n";
      }
    }
  }
  return out.str();
}

std::string emit_html(const Report& report) {
  const Document& doc = report.document;
  const auto n = static_cast<std::size_t>(doc.length());
  // Per symbol: owning group index and whether it is an extension value.
  // Occurrences claim symbols first, in report order; extension values
  // only take what is left.
  std::vector<int> owner(n, -1);
  std::vector<bool> ext(n, false);
  std::vector<std::vector<int>> empty_ext(n + 1);
  for (std::size_t gi = 0; gi < report.groups.size(); ++gi) {
    for (const auto& part : report.groups[gi].parts()) {
      for (const auto& g : part.occurrences()) {
        for (Coord c = g.b(); c <= g.e(); ++c) {
          if (owner[c - 1] < 0) owner[c - 1] = static_cast<int>(gi);
        }
      }
    }
  }
  for (std::size_t gi = 0; gi < report.groups.size(); ++gi) {
    for (const auto& tuple : extension_values(report.groups[gi])) {
      for (const auto& v : tuple) {
        if (v.empty()) {
          empty_ext[v.begin - 1].push_back(static_cast<int>(gi));
          continue;
        }
        for (Coord c = v.begin; c <= v.end; ++c) {
          if (owner[c - 1] < 0) {
            owner[c - 1] = static_cast<int>(gi);
            ext[c - 1] = true;
          }
        }
      }
    }
  }

  std::string out;
  out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>";
  for (char32_t c : utf8::decode(doc.id)) html_escape(out, c);
  out += "</title>\n<style>\n";
  out += "pre { white-space: pre-wrap; }\n";
  out += "mark.ext { font-weight: bold; text-decoration: underline; }\n";
  out += "mark.empty::before { content: \"\\2038\"; }\n";
  for (std::size_t gi = 0; gi < report.groups.size(); ++gi) {
    out += ".g" + std::to_string(gi) + " { background: hsl(" +
           std::to_string((gi * 137) % 360) + ", 70%, 85%); }\n";
  }
  out += "</style>\n</head>\n<body>\n<h1>Duplicate report</h1>\n<p>groups: " +
         std::to_string(report.groups.size()) + ", coverage: " +
         format_rational(report.coverage) + "</p>\n<ul>\n";
  for (std::size_t gi = 0; gi < report.groups.size(); ++gi) {
    const auto& vg = report.groups[gi];
    out += "<li><span class=\"g" + std::to_string(gi) + "\">" + group_id(vg) +
           "</span>: " + std::to_string(vg.arity()) + " part(s), " +
           std::to_string(vg.cardinality()) + " tuples</li>\n";
  }
  out += "</ul>\n<pre>";

  int open_group = -1;
  bool open_ext = false;
  auto close = [&] {
    if (open_group >= 0) out += open_ext ? "</mark>" : "</span>";
    open_group = -1;
  };
  for (std::size_t i = 0; i <= n; ++i) {
    if (!empty_ext[i].empty()) {
      close();
      for (int gi : empty_ext[i]) {
        out += "<mark class=\"ext empty g" + std::to_string(gi) + "\"></mark>";
      }
    }
    if (i == n) break;
    if (owner[i] != open_group || (owner[i] >= 0 && ext[i] != open_ext)) {
      close();
      if (owner[i] >= 0) {
        open_group = owner[i];
        open_ext = ext[i];
        const std::string cls = "g" + std::to_string(open_group);
        out += open_ext ? "<mark class=\"ext " + cls + "\">"
                        : "<span class=\"dup " + cls + "\">";
      }
    }
    html_escape(out, doc.text[i]);
  }
  close();
  out += "</pre>\n</body>\n</html>\n";
  return out;
}

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::json: return to_json(report).dump(2) + "\n";
    case Format::text: return emit_text(report);
    case Format::html: return emit_html(report);
  }
  throw UsageError("unknown format");
}

std::vector<std::string> verify_groups(std::span<const VariationalGroup> groups,
                                       const Rational& tau) {
  // Recomputed from raw coordinates, without core_model predicates.
  std::vector<std::string> problems;
  const std::int64_t p = tau.numerator();
  const std::int64_t q = tau.denominator();
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& vg = groups[gi];
    const std::string where = "group #" + std::to_string(gi) + ": ";
    const std::size_t arity = vg.arity();
    const std::size_t m = vg.part(0).cardinality();
    bool shape_ok = true;
    for (std::size_t i = 0; i < arity; ++i) {
      const auto occ = vg.part(i).occurrences();
      if (occ.size() != m) {
        problems.push_back(where + "unequal cardinalities");
        shape_ok = false;
        break;
      }
      if (occ.size() < 2) problems.push_back(where + "part with < 2 occurrences");
      for (std::size_t a = 0; a < occ.size(); ++a) {
        if (occ[a].b() < 1 || occ[a].e() < occ[a].b()) {
          problems.push_back(where + "invalid interval");
        }
        for (std::size_t b = a + 1; b < occ.size(); ++b) {
          if (occ[a].b() <= occ[b].e() && occ[b].b() <= occ[a].e()) {
            problems.push_back(where + "overlapping occurrences in part " +
                               std::to_string(i));
          }
        }
      }
    }
    if (!shape_ok) continue;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < arity; ++i) {
        for (std::size_t j = 0; j < arity; ++j) {
          const bool ordered = vg.part(i)[k].e() < vg.part(j)[k].b();
          if ((i < j) != ordered) {
            problems.push_back(where + "tuple " + std::to_string(k) + " out of order");
          }
        }
      }
      if (k + 1 < m && !(vg.part(arity - 1)[k].e() < vg.part(0)[k + 1].b())) {
        problems.push_back(where + "tuple " + std::to_string(k) + " overlaps the next");
      }
      std::int64_t fixed = 0;
      std::int64_t gaps = 0;
      for (std::size_t i = 0; i < arity; ++i) {
        fixed += vg.part(i)[k].e() - vg.part(i)[k].b() + 1;
        if (i + 1 < arity) {
          const Coord e1 = vg.part(i)[k].e();
          const Coord b2 = vg.part(i + 1)[k].b();
          gaps += e1 < b2 ? b2 - e1 + 1 : 0;
        }
      }
      if (q * gaps > p * fixed) {
        problems.push_back(where + "tuple " + std::to_string(k) + " gaps " +
                           std::to_string(gaps) + " exceed " +
                           format_rational(tau) + " of " + std::to_string(fixed));
      }
    }
  }
  return problems;
}

}  // namespace docdup
