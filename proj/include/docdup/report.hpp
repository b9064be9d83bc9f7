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

#include "docdup/core_model.hpp"
#include "docdup/exact_detector.hpp"
#include "docdup/ingest.hpp"
#include "docdup/rational.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace docdup {

inline constexpr std::string_view kReportSchema = "docdup_report_v1";

struct PipelineConfig {
  IngestOptions ingest;
  DetectorConfig detector;
  Rational threshold = default_threshold();
};

/// Extension-point count -> number of groups.
using ArityHistogram = std::map<std::size_t, std::size_t>;

struct Report {
  Document document;
  PipelineConfig config;
  std::size_t token_count = 0;
  std::size_t exact_group_count = 0;
  /// Canonically ordered output groups (lifted exact groups included).
  std::vector<VariationalGroup> groups;
  ArityHistogram histogram;
  Rational coverage{0};
};

ArityHistogram compute_histogram(std::span<const VariationalGroup> groups);

/// |union of occurrence intervals| / length; 0 for an empty document.
Rational compute_coverage(const Document& doc,
                          std::span<const VariationalGroup> groups);

/// 16 hex digits of FNV-1a over the sorted occurrence coordinates.
std::string group_id(const VariationalGroup& group);

enum class Format { json, text, html };

/// Throws UsageError for anything but json, text or html.
Format parse_format(std::string_view name);
std::string_view extension(Format format);

nlohmann::ordered_json to_json(const Report& report);

std::string emit(const Report& report, Format format);
std::string emit_text(const Report& report);
std::string emit_html(const Report& report);

/// Rebuilds the groups of a json report. Throws InputError when the
/// document is not a docdup_report_v1 report.
std::vector<VariationalGroup> groups_from_json(const nlohmann::json& report);

/// Re-derives every group's validity from raw coordinates: disjoint
/// occurrences, variational order and the gap budget. Returns one message
/// per violation.
std::vector<std::string> verify_groups(std::span<const VariationalGroup> groups,
                                       const Rational& tau);

}  // namespace docdup
