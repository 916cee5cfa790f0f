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

#ifndef BANKLENS_INGEST_YOUTUBE_H_
#define BANKLENS_INGEST_YOUTUBE_H_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "banklens/ingest/ingest.h"

namespace banklens::ingest {

inline constexpr const char* kYouTubeKeyEnv = "BANKLENS_YOUTUBE_API_KEY";

// Reads the API key from BANKLENS_YOUTUBE_API_KEY. Throws ConfigError when it
// is unset or empty.
std::string youtube_key_from_env();

struct YouTubeOptions {
  std::string base_url = "https://www.googleapis.com/youtube/v3";
  std::string api_key;
  int max_videos = 10;
  int page_size = 100;
  int timeout_seconds = 30;
  int max_attempts = 3;
  std::chrono::milliseconds backoff{500};  // doubled after each failed attempt
};

// Live source over the public Data API: the query selects videos through
// search, then every top-level comment thread of each video is paged
// through. Videos with comments disabled are skipped. Transport failures,
// 429 and 5xx replies are retried; anything else is a RemoteError.
class YouTubeSource : public CommentSource {
 public:
  // Throws ConfigError without an API key, ArgumentError for a bad base URL.
  explicit YouTubeSource(YouTubeOptions options);

  Page fetch(const std::string& query,
             const std::optional<std::string>& page_token) override;
  std::string name() const override { return "youtube"; }

 private:
  std::string get(const std::string& path,
                  std::multimap<std::string, std::string> params,
                  bool* comments_disabled = nullptr) const;
  const std::vector<std::string>& videos(const std::string& query);

  YouTubeOptions options_;
  std::string scheme_host_;
  std::string prefix_;
  std::map<std::string, std::vector<std::string>> videos_by_query_;
};

}  // namespace banklens::ingest

#endif  // BANKLENS_INGEST_YOUTUBE_H_
