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

#include "docdup/error.hpp"
#include "docdup/pipeline.hpp"
#include "docdup/utf8.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::vector<std::string> paths;
  std::size_t min_tokens = 5;
  std::size_t min_group = 2;
  std::string threshold = "3/20";
  std::string format = "json";
  bool strip_markup = false;
  std::string separators;
  std::string out_dir;
};

// Output file names for --out: the input's file name plus the format
// extension, prefixed with the input position when two inputs collide.
std::vector<fs::path> output_names(const std::vector<std::string>& paths,
                                   std::string_view ext) {
  std::vector<fs::path> names;
  std::set<std::string> seen;
  std::set<std::string> clashing;
  for (const auto& p : paths) {
    const auto base = fs::path(p).filename().string();
    if (!seen.insert(base).second) clashing.insert(base);
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto base = fs::path(paths[i]).filename().string();
    if (clashing.contains(base)) base = std::to_string(i) + "_" + base;
    names.emplace_back(base + "." + std::string(ext));
  }
  return names;
}

int detect(const Options& opt) {
  docdup::PipelineConfig config;
  config.detector.min_tokens = opt.min_tokens;
  config.detector.min_group_size = opt.min_group;
  config.threshold = docdup::parse_rational(opt.threshold);
  config.ingest.strip_markup = opt.strip_markup;
  if (!opt.separators.empty()) {
    config.ingest.separators = docdup::utf8::decode(opt.separators);
  }
  config.detector.validate();
  const auto format = docdup::parse_format(opt.format);

  const auto results = docdup::run(opt.paths, config, docdup::threads_from_env());

  int code = kExitOk;
  for (const auto& r : results) {
    if (r.status == docdup::Status::input_error) {
      std::cerr << "docdup: error: " << r.error << "\n";
      code = std::max(code, kExitInput);
    } else if (r.status == docdup::Status::internal_error) {
      std::cerr << "docdup: internal error: " << r.path << ": " << r.error << "\n";
      code = std::max(code, kExitInternal);
    }
  }

  if (!opt.out_dir.empty()) {
    fs::create_directories(opt.out_dir);
    const auto names = output_names(opt.paths, docdup::extension(format));
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].report) continue;
      const auto target = fs::path(opt.out_dir) / names[i];
      std::ofstream out(target, std::ios::binary);
      out << docdup::emit(*results[i].report, format);
      if (!out) {
        std::cerr << "docdup: error: cannot write " << target.string() << "\n";
        code = std::max(code, kExitInput);
      }
    }
    return code;
  }

  if (format == docdup::Format::json && opt.paths.size() > 1) {
    auto all = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      if (r.report) all.push_back(docdup::to_json(*r.report));
    }
    std::cout << all.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (r.report) std::cout << docdup::emit(*r.report, format);
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finds exact and near-duplicate text in documentation"};
  app.require_subcommand(1);

  Options opt;
  auto* cmd = app.add_subcommand("detect", "Report duplicate groups for each input file");
  cmd->add_option("paths", opt.paths, "UTF-8 text files")->required();
  cmd->add_option("--min-tokens", opt.min_tokens, "Minimum exact duplicate length in tokens")
      ->capture_default_str();
  cmd->add_option("--min-group", opt.min_group, "Minimum number of occurrences per group")
      ->capture_default_str();
  cmd->add_option("--threshold", opt.threshold,
                  "Gap budget relative to fixed text, as p/q")
      ->capture_default_str();
  cmd->add_option("--format", opt.format, "json, text or html")
      ->check(CLI::IsMember({"json", "text", "html"}))
      ->capture_default_str();
  cmd->add_flag("--strip-markup", opt.strip_markup,
                "Blank out <tags> before tokenizing (coordinates unchanged)");
  cmd->add_option("--separators", opt.separators,
                  "Replace the default separator set with these symbols");
  cmd->add_option("--out", opt.out_dir, "Write one report file per input into DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    return detect(opt);
  } catch (const docdup::UsageError& e) {
    std::cerr << "docdup: " << e.what() << "\n";
    return kExitInput;
  } catch (const docdup::InputError& e) {
    std::cerr << "docdup: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "docdup: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
