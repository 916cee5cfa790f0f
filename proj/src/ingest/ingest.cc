// Copyright 2026 The Banklens Authors.
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

#include "banklens/ingest/ingest.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <unordered_set>

#include "banklens/core/comment_io.h"
#include "banklens/core/error.h"

namespace banklens::ingest {

using nlohmann::json;
using nlohmann::ordered_json;

FileSource::FileSource(const std::filesystem::path& path)
    : filename_(path.filename().string()) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json page = json::parse(line);
      if (!page.is_object() || !page.contains("comments") ||
          !page["comments"].is_array()) {
        throw ParseError("page needs a \"comments\" array", number);
      }
      pages_.push_back(std::move(page));
    } catch (const json::exception& e) {
      throw ParseError(path.string() + ": " + e.what(), number);
    }
  }
}

Page FileSource::fetch(const std::string&, const std::optional<std::string>& page_token) {
  std::size_t index = 0;
  if (page_token) {
    try {
      index = std::stoul(*page_token) - 1;
    } catch (const std::exception&) {
      throw ArgumentError("bad page token '" + *page_token + "'");
    }
    if (index >= pages_.size()) throw ArgumentError("bad page token '" + *page_token + "'");
  }
  ++fetches_;
  Page page;
  if (pages_.empty()) return page;
  for (const json& item : pages_[index]["comments"]) {
    try {
      page.comments.push_back(comment_from_json(item));
    } catch (const ParseError&) {
      ++page.malformed;
    }
  }
  if (index + 1 < pages_.size()) page.next_page = std::to_string(index + 2);
  return page;
}

std::vector<Comment> dedup(const std::vector<Comment>& comments) {
  std::unordered_set<std::string> seen;
  std::vector<Comment> out;
  for (const Comment& c : comments) {
    if (seen.insert(c.text()).second) out.push_back(c);
  }
  return out;
}

IngestResult ingest(CommentSource& source, const std::string& query,
                    const IngestConfig& config) {
  if (query.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw ArgumentError("ingest query must be non-empty");
  }
  if (config.max_pages < 0) throw ArgumentError("max_pages must be >= 0");
  IngestResult result;
  IngestReport& report = result.report;
  std::vector<Comment> cleaned;
  std::optional<std::string> token;
  while (config.max_pages == 0 || report.pages < config.max_pages) {
    Page page;
    try {
      page = source.fetch(query, token);
    } catch (const Error& e) {
      report.errors.push_back(source.name() + " page " + std::to_string(report.pages + 1) +
                              ": " + e.what());
      break;
    }
    ++report.pages;
    report.malformed_skipped += page.malformed;
    for (const Comment& c : page.comments) {
      std::string text;
      try {
        text = text::normalize_text(c.text(), config.normalization);
      } catch (const DecodeError&) {
        ++report.malformed_skipped;
        continue;
      }
      ++report.fetched;
      if (text.empty()) {
        ++report.empty_removed;
        continue;
      }
      cleaned.push_back(c.with_text(std::move(text)));
    }
    if (!page.next_page) break;
    token = page.next_page;
  }
  result.comments = dedup(cleaned);
  report.duplicates_removed = static_cast<int>(cleaned.size() - result.comments.size());
  report.persisted = static_cast<int>(result.comments.size());
  return result;
}

ordered_json report_json(const IngestReport& report) {
  ordered_json j;
  j["fetched"] = report.fetched;
  j["duplicates_removed"] = report.duplicates_removed;
  j["empty_removed"] = report.empty_removed;
  j["persisted"] = report.persisted;
  j["malformed_skipped"] = report.malformed_skipped;
  j["pages"] = report.pages;
  j["errors"] = report.errors;
  return j;
}

void persist(const std::filesystem::path& path, const IngestResult& result,
             const std::string& query, const std::string& source_name,
             const std::string& run_timestamp) {
  write_comments(path, result.comments);
  ordered_json manifest;
  manifest["query"] = query;
  manifest["source"] = source_name;
  manifest["timestamp"] = run_timestamp;
  manifest["output"] = path.filename().string();
  manifest["counts"] = report_json(result.report);
  std::filesystem::path sidecar = path;
  sidecar += ".manifest.json";
  std::ofstream out(sidecar, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + sidecar.string());
  out << manifest.dump(2) << '\n';
  if (!out) throw IoError("cannot write " + sidecar.string());
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace banklens::ingest
