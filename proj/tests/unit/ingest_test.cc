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

#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>

#include "json.hpp"

#include "banklens/core/comment_io.h"
#include "banklens/core/error.h"
#include "banklens/ingest/ingest.h"
#include "banklens/ingest/youtube.h"
#include "mock_server.h"
#include "test_util.h"

namespace banklens::ingest {
namespace {

using nlohmann::json;

std::string fixture(const std::string& name) {
  return testing::fixture_path("ingest/" + name);
}

std::vector<Comment> texts(const std::vector<std::string>& ts) {
  std::vector<Comment> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out.emplace_back("c" + std::to_string(i), "s", ts[i]);
  }
  return out;
}

std::vector<std::string> text_of(const std::vector<Comment>& cs) {
  std::vector<std::string> out;
  for (const Comment& c : cs) out.push_back(c.text());
  return out;
}

void expect_arithmetic(const IngestReport& r) {
  EXPECT_EQ(r.persisted, r.fetched - r.duplicates_removed - r.empty_removed);
}

// Throws on the page after `good_pages` successful ones.
class FlakySource : public CommentSource {
 public:
  explicit FlakySource(int good_pages) : good_pages_(good_pages) {}
  Page fetch(const std::string&, const std::optional<std::string>& token) override {
    const int index = token ? std::stoi(*token) : 0;
    if (index >= good_pages_) throw RemoteError("quota exceeded");
    Page page;
    page.comments.emplace_back("p" + std::to_string(index), "flaky",
                               "page " + std::to_string(index) + " loan");
    page.next_page = std::to_string(index + 1);
    return page;
  }
  std::string name() const override { return "flaky"; }

 private:
  int good_pages_;
};

TEST(DedupTest, Basics) {
  EXPECT_EQ(text_of(dedup(texts({"a", "b", "a"}))), (std::vector<std::string>{"a", "b"}));
  const auto distinct = texts({"x", "y", "z"});
  EXPECT_EQ(dedup(distinct), distinct);
  EXPECT_TRUE(dedup({}).empty());
  // the first occurrence keeps its metadata
  EXPECT_EQ(dedup(texts({"a", "b", "a"}))[0].id(), "c0");
}

TEST(DedupTest, Idempotent) {
  const auto once = dedup(texts({"a", "b", "a", "c", "b", "a", "d"}));
  EXPECT_EQ(dedup(once), once);
}

TEST(FileSourceTest, OnePageAndThreePages) {
  FileSource one(fixture("single_page.jsonl"));
  const Page p = one.fetch("q", std::nullopt);
  EXPECT_EQ(p.comments.size(), 2u);
  EXPECT_FALSE(p.next_page.has_value());

  FileSource three(fixture("pages3.jsonl"));
  std::optional<std::string> token;
  std::vector<std::size_t> sizes;
  do {
    const Page page = three.fetch("q", token);
    sizes.push_back(page.comments.size());
    token = page.next_page;
  } while (token);
  EXPECT_EQ(three.fetch_count(), 3);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{10, 10, 5}));
}

TEST(FileSourceTest, Errors) {
  EXPECT_THROW(FileSource("/nonexistent/pages.jsonl"), IoError);
  testing::TempDir dir;
  testing::write_file(dir.file("bad.jsonl"), "{\"comments\": []}\n{not json\n");
  try {
    FileSource source(dir.file("bad.jsonl"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  testing::write_file(dir.file("shape.jsonl"), "{\"items\": []}\n");
  EXPECT_THROW(FileSource(dir.file("shape.jsonl")), ParseError);
  FileSource ok(fixture("single_page.jsonl"));
  EXPECT_THROW(ok.fetch("q", std::string("7")), ArgumentError);
}

TEST(IngestTest, ThreePageFixture) {
  FileSource source(fixture("pages3.jsonl"));
  const IngestResult r = ingest(source, "\"savings account\" OR loan");
  EXPECT_EQ(r.report.fetched, 25);
  EXPECT_EQ(r.report.pages, 3);
  EXPECT_GE(r.report.duplicates_removed, 1);
  EXPECT_EQ(r.report.duplicates_removed, 1);
  EXPECT_EQ(r.report.empty_removed, 1);
  EXPECT_EQ(r.report.persisted, 23);
  expect_arithmetic(r.report);
  for (const Comment& c : r.comments) {
    EXPECT_FALSE(c.text().empty());
    EXPECT_EQ(c.text(), text::normalize_text(c.text()));
  }
}

TEST(IngestTest, PlantedDuplicates) {
  FileSource source(fixture("dups100.jsonl"));
  const IngestResult r = ingest(source, "bank");
  EXPECT_EQ(r.report.fetched, 100);
  EXPECT_EQ(r.report.duplicates_removed, 17);
  EXPECT_EQ(r.comments.size(), 83u);
  expect_arithmetic(r.report);
}

TEST(IngestTest, MaxPagesStopsEarly) {
  FileSource source(fixture("dups100.jsonl"));
  IngestConfig config;
  config.max_pages = 2;
  const IngestResult r = ingest(source, "bank", config);
  EXPECT_EQ(r.report.pages, 2);
  EXPECT_EQ(r.report.fetched, 60);
  expect_arithmetic(r.report);
}

TEST(IngestTest, MalformedCommentsAreCounted) {
  FileSource source(fixture("malformed.jsonl"));
  const IngestResult r = ingest(source, "bank");
  EXPECT_EQ(r.report.malformed_skipped, 2);
  EXPECT_EQ(r.report.fetched, 2);
  expect_arithmetic(r.report);
}

TEST(IngestTest, SourceFailureKeepsPartialResults) {
  FlakySource source(2);
  const IngestResult r = ingest(source, "bank");
  EXPECT_EQ(r.report.pages, 2);
  EXPECT_EQ(r.comments.size(), 2u);
  ASSERT_EQ(r.report.errors.size(), 1u);
  EXPECT_NE(r.report.errors[0].find("quota exceeded"), std::string::npos);
  expect_arithmetic(r.report);
}

TEST(IngestTest, EmptyQueryRejected) {
  FileSource source(fixture("single_page.jsonl"));
  EXPECT_THROW(ingest(source, ""), ArgumentError);
  EXPECT_THROW(ingest(source, "   "), ArgumentError);
}

TEST(IngestTest, RerunIsByteIdenticalAndArithmeticHoldsOnDisk) {
  testing::TempDir dir;
  for (const char* name : {"a.jsonl", "b.jsonl"}) {
    FileSource source(fixture("dups100.jsonl"));
    const IngestResult r = ingest(source, "bank");
    persist(dir.file(name), r, "bank", source.name(), "2026-01-01T00:00:00Z");
  }
  EXPECT_EQ(testing::read_file(dir.file("a.jsonl")), testing::read_file(dir.file("b.jsonl")));

  const json manifest = json::parse(testing::read_file(dir.file("a.jsonl.manifest.json")));
  EXPECT_EQ(manifest["query"], "bank");
  EXPECT_EQ(manifest["source"], "file:dups100.jsonl");
  const auto persisted = read_comments(dir.file("a.jsonl"));
  const json& counts = manifest["counts"];
  EXPECT_EQ(static_cast<int>(persisted.size()), counts["persisted"].get<int>());
  EXPECT_EQ(counts["persisted"].get<int>(),
            counts["fetched"].get<int>() - counts["duplicates_removed"].get<int>() -
                counts["empty_removed"].get<int>());
}

TEST(IngestTest, UtcTimestampShape) {
  const std::string t = utc_timestamp();
  ASSERT_EQ(t.size(), 20u);
  EXPECT_EQ(t[4], '-');
  EXPECT_EQ(t[10], 'T');
  EXPECT_EQ(t.back(), 'Z');
}

// Two videos; the first has two comment pages, the second has comments
// disabled, the third one page.
class FakeYouTube {
 public:
  FakeYouTube() {
    server_.server().Get("/v3/search", [this](const httplib::Request& req,
                                              httplib::Response& res) {
      last_query = req.get_param_value("q");
      if (req.get_param_value("key") != "k") {
        res.status = 400;
        return;
      }
      res.set_content(R"({"items":[{"id":{"videoId":"v1"}},{"id":{"videoId":"v2"}},
                                   {"id":{"videoId":"v3"}}]})",
                      "application/json");
    });
    server_.server().Get("/v3/commentThreads", [this](const httplib::Request& req,
                                                      httplib::Response& res) {
      if (failures_left > 0) {
        --failures_left;
        res.status = 503;
        return;
      }
      ++thread_calls;
      const std::string video = req.get_param_value("videoId");
      const std::string token = req.get_param_value("pageToken");
      if (video == "v2") {
        res.status = 403;
        res.set_content(R"({"error":{"errors":[{"reason":"commentsDisabled"}]}})",
                        "application/json");
        return;
      }
      json reply;
      reply["items"] = json::array();
      auto add = [&](const std::string& id, const std::string& text) {
        reply["items"].push_back(
            {{"snippet",
              {{"topLevelComment",
                {{"id", id},
                 {"snippet", {{"textOriginal", text},
                              {"publishedAt", "2024-01-01T00:00:00Z"}}}}}}}});
      };
      if (video == "v1" && token.empty()) {
        add("y1", "Loan approval took a month");
        add("y2", "The app crashes");
        reply["nextPageToken"] = "NEXT";
      } else if (video == "v1") {
        add("y3", "Great branch staff");
        reply["items"].push_back({{"snippet", json::object()}});
      } else {
        add("y4", "The app crashes");
      }
      res.set_content(reply.dump(), "application/json");
    });
    server_.start();
  }

  YouTubeOptions options() const {
    YouTubeOptions o;
    o.base_url = server_.url() + "/v3";
    o.api_key = "k";
    o.backoff = std::chrono::milliseconds(1);
    return o;
  }

  std::string last_query;
  std::atomic<int> failures_left{0};
  std::atomic<int> thread_calls{0};

 private:
  testing::MockServer server_;
};

TEST(YouTubeSourceTest, PagesThroughVideosAndSkipsDisabledComments) {
  FakeYouTube yt;
  YouTubeSource source(yt.options());
  const IngestResult r = ingest(source, "\"mobile banking\" OR loan");
  EXPECT_EQ(yt.last_query, "\"mobile banking\" OR loan");
  EXPECT_EQ(r.report.pages, 4);
  EXPECT_EQ(r.report.fetched, 4);
  EXPECT_EQ(r.report.malformed_skipped, 1);
  EXPECT_EQ(r.report.duplicates_removed, 1);
  ASSERT_EQ(r.comments.size(), 3u);
  EXPECT_EQ(r.comments[0].id(), "y1");
  EXPECT_EQ(r.comments[0].source(), "youtube:v1");
  EXPECT_EQ(r.comments[0].text(), "loan approval took a month");
  EXPECT_EQ(r.comments[0].timestamp(), "2024-01-01T00:00:00Z");
}

TEST(YouTubeSourceTest, RetriesServerErrors) {
  FakeYouTube yt;
  yt.failures_left = 2;
  YouTubeSource source(yt.options());
  const Page page = source.fetch("loan", std::nullopt);
  EXPECT_EQ(page.comments.size(), 2u);

  yt.failures_left = 3;
  EXPECT_THROW(source.fetch("loan", std::nullopt), RemoteError);
}

TEST(YouTubeSourceTest, ClientErrorsAreNotRetried) {
  FakeYouTube yt;
  YouTubeOptions o = yt.options();
  o.api_key = "wrong";
  YouTubeSource source(o);
  EXPECT_THROW(source.fetch("loan", std::nullopt), RemoteError);
  EXPECT_EQ(yt.thread_calls.load(), 0);
}

TEST(YouTubeSourceTest, KeyFromEnvironment) {
  ::unsetenv(kYouTubeKeyEnv);
  EXPECT_THROW(youtube_key_from_env(), ConfigError);
  ::setenv(kYouTubeKeyEnv, "abc", 1);
  EXPECT_EQ(youtube_key_from_env(), "abc");
  ::unsetenv(kYouTubeKeyEnv);
  EXPECT_THROW(YouTubeSource(YouTubeOptions{}), ConfigError);
}

TEST(YouTubeSourceTest, UnreachableHost) {
  YouTubeOptions o;
  o.base_url = testing::dead_url();
  o.api_key = "k";
  o.backoff = std::chrono::milliseconds(1);
  YouTubeSource source(o);
  const IngestResult r = ingest(source, "loan");
  EXPECT_EQ(r.report.pages, 0);
  EXPECT_EQ(r.report.errors.size(), 1u);
}

}  // namespace
}  // namespace banklens::ingest
