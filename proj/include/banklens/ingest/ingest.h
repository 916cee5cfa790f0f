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

#ifndef BANKLENS_INGEST_INGEST_H_
#define BANKLENS_INGEST_INGEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "banklens/core/types.h"
#include "banklens/text/normalize.h"

namespace banklens::ingest {

struct Page {
  std::vector<Comment> comments;
  std::optional<std::string> next_page;
  int malformed = 0;  // items the source could not turn into a Comment
};

class CommentSource {
 public:
  virtual ~CommentSource() = default;
  // A null token asks for the first page.
  virtual Page fetch(const std::string& query,
                     const std::optional<std::string>& page_token) = 0;
  virtual std::string name() const = 0;
};

// Replays a JSON-lines file, one page per line:
//   {"comments": [{"id": ..., "text": ...}, ...]}
// Page tokens are 1-based line indices. The query is ignored.
class FileSource : public CommentSource {
 public:
  // Throws IoError or ParseError with the line.
  explicit FileSource(const std::filesystem::path& path);

  Page fetch(const std::string& query,
             const std::optional<std::string>& page_token) override;
  std::string name() const override { return "file:" + filename_; }

  int page_count() const { return static_cast<int>(pages_.size()); }
  int fetch_count() const { return fetches_; }

 private:
  std::vector<nlohmann::json> pages_;
  std::string filename_;
  int fetches_ = 0;
};

struct IngestConfig {
  int max_pages = 0;  // 0 means until the source is exhausted
  text::NormalizationConfig normalization;
};

struct IngestReport {
  int fetched = 0;
  int duplicates_removed = 0;
  int empty_removed = 0;
  int persisted = 0;
  int malformed_skipped = 0;
  int pages = 0;
  std::vector<std::string> errors;
};

struct IngestResult {
  std::vector<Comment> comments;
  IngestReport report;
};

// First occurrence of each exact text wins; order is kept.
std::vector<Comment> dedup(const std::vector<Comment>& comments);

// Paginates, normalizes, drops comments that clean to nothing, dedups. A
// source failure stops pagination and is recorded in the report; what was
// fetched so far is kept. Throws ArgumentError for an empty query.
IngestResult ingest(CommentSource& source, const std::string& query,
                    const IngestConfig& config = {});

nlohmann::ordered_json report_json(const IngestReport& report);

// Writes the comments as JSON lines and a sidecar `<path>.manifest.json`
// with the query, source, run time and counts. Throws IoError.
void persist(const std::filesystem::path& path, const IngestResult& result,
             const std::string& query, const std::string& source_name,
             const std::string& run_timestamp);

// UTC now as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

}  // namespace banklens::ingest

#endif  // BANKLENS_INGEST_INGEST_H_
