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

#include "banklens/ingest/youtube.h"

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "banklens/core/endpoint.h"
#include "banklens/core/error.h"

namespace banklens::ingest {

using nlohmann::json;

std::string youtube_key_from_env() {
  const char* key = std::getenv(kYouTubeKeyEnv);
  if (!key || !*key) {
    throw ConfigError(std::string("the live source needs ") + kYouTubeKeyEnv);
  }
  return key;
}

YouTubeSource::YouTubeSource(YouTubeOptions options) : options_(std::move(options)) {
  if (options_.api_key.empty()) throw ConfigError("YouTube API key is empty");
  if (options_.max_videos < 1 || options_.page_size < 1 || options_.max_attempts < 1) {
    throw ArgumentError("max_videos, page_size and max_attempts must be >= 1");
  }
  Endpoint endpoint = split_endpoint(options_.base_url);
  scheme_host_ = std::move(endpoint.scheme_host);
  prefix_ = std::move(endpoint.prefix);
}

std::string YouTubeSource::get(const std::string& path,
                               std::multimap<std::string, std::string> params,
                               bool* comments_disabled) const {
  params.emplace("key", options_.api_key);
  const httplib::Params query(params.begin(), params.end());
  const std::string what = "GET " + options_.base_url + path;
  std::string last_error;
  auto delay = options_.backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    httplib::Client client(scheme_host_);
    client.set_connection_timeout(options_.timeout_seconds);
    client.set_read_timeout(options_.timeout_seconds);
    auto res = client.Get(prefix_ + path, query, httplib::Headers{});
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return res->body;
    if (res->status == 403 && comments_disabled &&
        res->body.find("commentsDisabled") != std::string::npos) {
      *comments_disabled = true;
      return {};
    }
    last_error = "HTTP " + std::to_string(res->status);
    if (res->status != 429 && res->status < 500) break;
  }
  throw RemoteError(what + ": " + last_error);
}

const std::vector<std::string>& YouTubeSource::videos(const std::string& query) {
  auto it = videos_by_query_.find(query);
  if (it != videos_by_query_.end()) return it->second;
  const std::string body =
      get("/search", {{"part", "id"},
                      {"type", "video"},
                      {"maxResults", std::to_string(options_.max_videos)},
                      {"q", query}});
  std::vector<std::string> ids;
  try {
    const json reply = json::parse(body);
    for (const json& item : reply.at("items")) {
      ids.push_back(item.at("id").at("videoId").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw RemoteError("malformed search reply: " + std::string(e.what()));
  }
  return videos_by_query_.emplace(query, std::move(ids)).first->second;
}

// Tokens are "<video index>:<api page token>".
Page YouTubeSource::fetch(const std::string& query,
                          const std::optional<std::string>& page_token) {
  const std::vector<std::string>& ids = videos(query);
  std::size_t video = 0;
  std::string api_token;
  if (page_token) {
    const auto colon = page_token->find(':');
    try {
      video = std::stoul(page_token->substr(0, colon));
    } catch (const std::exception&) {
      throw ArgumentError("bad page token '" + *page_token + "'");
    }
    if (colon != std::string::npos) api_token = page_token->substr(colon + 1);
  }
  Page page;
  if (video >= ids.size()) return page;

  std::multimap<std::string, std::string> params = {
      {"part", "snippet"},
      {"videoId", ids[video]},
      {"maxResults", std::to_string(options_.page_size)},
      {"textFormat", "plainText"}};
  if (!api_token.empty()) params.emplace("pageToken", api_token);
  bool disabled = false;
  const std::string body = get("/commentThreads", params, &disabled);
  std::string next;
  if (!disabled) {
    json reply;
    try {
      reply = json::parse(body);
    } catch (const json::exception& e) {
      throw RemoteError("malformed commentThreads reply: " + std::string(e.what()));
    }
    for (const json& item : reply.value("items", json::array())) {
      try {
        const json& top = item.at("snippet").at("topLevelComment");
        const json& snippet = top.at("snippet");
        page.comments.emplace_back(top.at("id").get<std::string>(), "youtube:" + ids[video],
                                   snippet.at("textOriginal").get<std::string>(),
                                   snippet.value("publishedAt", std::string()));
      } catch (const std::exception&) {
        ++page.malformed;
      }
    }
    next = reply.value("nextPageToken", std::string());
  }
  if (!next.empty()) {
    page.next_page = std::to_string(video) + ":" + next;
  } else if (video + 1 < ids.size()) {
    page.next_page = std::to_string(video + 1) + ":";
  }
  return page;
}

}  // namespace banklens::ingest
