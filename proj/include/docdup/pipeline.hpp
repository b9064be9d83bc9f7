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

#include "docdup/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace docdup {

/// Tokenize, detect exact groups, merge, and summarize one document.
Report analyze(Document doc, const PipelineConfig& config);

enum class Status { ok, input_error, internal_error };

struct FileResult {
  std::string path;
  Status status = Status::ok;
  std::optional<Report> report;
  std::string error;
};

/// Thread cap from DOCDUP_THREADS, or 0 when unset or malformed.
int threads_from_env();

/// Processes `paths` concurrently (at most `threads` at once; 0 means the
/// OpenMP default) and returns results in input order.
std::vector<FileResult> run(const std::vector<std::string>& paths,
                            const PipelineConfig& config, int threads = 0);

}  // namespace docdup
