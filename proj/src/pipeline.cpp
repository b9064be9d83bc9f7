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

#include "docdup/pipeline.hpp"

#include "docdup/error.hpp"
#include "docdup/merger.hpp"
#include "docdup/omp.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace docdup {

Report analyze(Document doc, const PipelineConfig& config) {
  config.detector.validate();
  Report report;
  report.config = config;
  const auto tokens = tokenize(doc, config.ingest);
  report.token_count = tokens.size();
  auto exact = detect_exact_groups(doc, tokens, config.detector);
  report.exact_group_count = exact.size();
  for (const auto& g : exact) {
    if (!occurrences_match_text(doc, tokens, g)) {
      throw InvariantError("exact group occurrence does not reproduce its text");
    }
  }
  report.groups = construct_near_duplicate_groups(std::move(exact), config.threshold);
  if (auto problems = verify_groups(report.groups, config.threshold); !problems.empty()) {
    throw InvariantError("output group check failed: " + problems.front());
  }
  report.histogram = compute_histogram(report.groups);
  report.coverage = compute_coverage(doc, report.groups);
  report.document = std::move(doc);
  return report;
}

int threads_from_env() {
  const char* raw = std::getenv("DOCDUP_THREADS");
  if (raw == nullptr) return 0;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) return 0;
  return value;
}

std::vector<FileResult> run(const std::vector<std::string>& paths,
                            const PipelineConfig& config, int threads) {
  std::vector<FileResult> results(paths.size());
  const auto count = static_cast<std::int64_t>(paths.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();

  // Documents are independent; results land in their input slot.
  DOCDUP_OMP(parallel for schedule(dynamic, 1) num_threads(team))
  for (std::int64_t i = 0; i < count; ++i) {
    FileResult& r = results[i];
    r.path = paths[i];
    try {
      r.report = analyze(load_file(r.path, config.ingest), config);
    } catch (const InputError& e) {
      r.status = Status::input_error;
      r.error = e.what();
    } catch (const std::exception& e) {
      r.status = Status::internal_error;
      r.error = e.what();
    }
  }
  return results;
}

}  // namespace docdup
