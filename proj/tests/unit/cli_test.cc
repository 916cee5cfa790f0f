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

#include "banklens/cli/cli.h"

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mock_server.h"
#include "test_util.h"

namespace banklens::cli {
namespace {

namespace fs = std::filesystem;
using ::banklens::testing::fixture_path;
using ::banklens::testing::read_file;
using ::banklens::testing::TempDir;
using ::banklens::testing::write_file;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "banklens");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::vector<std::string> kPipelineFiles = {
    "relevant.jsonl", "quarantine.jsonl", "decisions.jsonl", "filter_report.json",
    "keywords.jsonl", "aspects.jsonl",    "report.json"};

int count_lines(const std::string& path) {
  const std::string s = read_file(path);
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

TEST(CliPipelineTest, MatchesCommittedGolden) {
  TempDir dir;
  const CliRun r = run({"pipeline", "--corpus", fixture_path("comments.jsonl"), "--lang",
                     "auto", "--provider", "hash", "--out", dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const auto& name : kPipelineFiles) {
    EXPECT_EQ(read_file(dir.file(name)), read_file(fixture_path("golden/pipeline/" + name)))
        << name;
  }
}

TEST(CliPipelineTest, ByteIdenticalAcrossRunsAndJobCounts) {
  TempDir a;
  TempDir b;
  const std::string corpus = fixture_path("comments.jsonl");
  ASSERT_EQ(run({"pipeline", "--corpus", corpus, "--out", a.path().string()}).code, 0);
  ASSERT_EQ(run({"pipeline", "--corpus", corpus, "--out", b.path().string(), "--jobs",
                 "8"}).code,
            0);
  for (const auto& name : kPipelineFiles) {
    EXPECT_EQ(read_file(a.file(name)), read_file(b.file(name))) << name;
  }
}

TEST(CliPipelineTest, FilterConservation) {
  TempDir dir;
  ASSERT_EQ(run({"pipeline", "--corpus", fixture_path("comments.jsonl"), "--out",
                 dir.path().string()}).code,
            0);
  const int kept = count_lines(dir.file("relevant.jsonl"));
  const int removed = count_lines(dir.file("quarantine.jsonl"));
  EXPECT_EQ(kept + removed, 100);
  const auto report = nlohmann::json::parse(read_file(dir.file("report.json")));
  EXPECT_EQ(report["filter"]["kept"], kept);
  EXPECT_EQ(report["filter"]["removed"], removed);
  EXPECT_EQ(report["extract"]["documents"], kept);
  EXPECT_EQ(count_lines(dir.file("keywords.jsonl")), kept);
  EXPECT_EQ(count_lines(dir.file("aspects.jsonl")), kept);
}

TEST(CliPipelineTest, IgnoresEndpointWithoutRemoteSelection) {
  TempDir dir;
  const CliRun r = run({"pipeline", "--corpus", fixture_path("comments.jsonl"), "--out",
                     dir.path().string(), "--endpoint", ::banklens::testing::dead_url()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(CliPipelineTest, ForcedLanguage) {
  TempDir dir;
  ASSERT_EQ(run({"pipeline", "--corpus", fixture_path("comments.jsonl"), "--out",
                 dir.path().string(), "--lang", "si"}).code,
            0);
  const auto report = nlohmann::json::parse(read_file(dir.file("report.json")));
  EXPECT_EQ(report["extract"]["sinhala"], report["extract"]["documents"]);
  EXPECT_EQ(report["extract"]["english"], 0);
}

TEST(CliExtractTest, LoanSentence) {
  for (const std::vector<std::string>& provider :
       {std::vector<std::string>{"--provider", "hash"},
        std::vector<std::string>{"--provider", "file", "--vectors",
                                 fixture_path("embed/vectors.jsonl")}}) {
    std::vector<std::string> args = {"extract", "--text",
                                     "Customer support delayed my loan approval"};
    args.insert(args.end(), provider.begin(), provider.end());
    const CliRun r = run(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("customer support"), std::string::npos) << r.out;
  }
}

TEST(CliExtractTest, TextAndCorpusAreExclusive) {
  EXPECT_EQ(run({"extract"}).code, kExitInvalid);
  EXPECT_EQ(run({"extract", "--text", "loan", "--corpus", fixture_path("comments.jsonl")})
                .code,
            kExitInvalid);
}

TEST(CliConfigTest, FileValuesApplyAndFlagsWin) {
  TempDir dir;
  const std::string config = dir.file("run.ini");
  write_file(config, "top-k=1\nlang=en\n");
  const std::string text = "Customer support delayed my loan approval";
  const CliRun one = run({"--config", config, "extract", "--text", text});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 1);
  const CliRun two = run({"--config", config, "extract", "--text", text, "--top-k", "2"});
  ASSERT_EQ(two.code, 0) << two.err;
  EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 2);
}

TEST(CliEvalTest, IdenticalFilesScoreHundred) {
  TempDir dir;
  const std::string csv = dir.file("table.csv");
  const CliRun r = run({"eval", "--gold", fixture_path("aspect/comments.jsonl"), "--pred",
                     fixture_path("aspect/comments.jsonl"), "--task", "aspect", "--csv",
                     csv});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("100.0"), std::string::npos) << r.out;
  EXPECT_EQ(read_file(csv), "name,accuracy,precision,recall,f1\naspect,100.0,100.0,100.0,100.0\n");
}

TEST(CliEvalTest, RelevanceAgainstFilterDecisions) {
  TempDir dir;
  ASSERT_EQ(run({"filter", "--corpus", fixture_path("relevance/comments.jsonl"), "--out",
                 dir.path().string()}).code,
            0);
  write_file(dir.file("gold.jsonl"), [] {
    std::string s;
    std::istringstream in(read_file(fixture_path("relevance/comments.jsonl")));
    std::string line;
    while (std::getline(in, line)) {
      auto row = nlohmann::json::parse(line);
      row["relevance"] = row["label"];
      s += row.dump() + "\n";
    }
    return s;
  }());
  const CliRun r = run({"eval", "--gold", dir.file("gold.jsonl"), "--pred",
                     dir.file("decisions.jsonl"), "--task", "relevance"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("n=10 skipped=0"), std::string::npos) << r.out;
}

TEST(CliEvalTest, KeywordTask) {
  const CliRun r = run({"eval", "--gold", fixture_path("eval/keyword_gold.jsonl"), "--pred",
                     fixture_path("eval/keyword_pred.jsonl"), "--task", "keywords", "--k",
                     "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("micro"), std::string::npos);
}

TEST(CliTrainTest, TrainedModelDrivesCascade) {
  TempDir dir;
  const std::string model = dir.file("aspect.json");
  const CliRun t = run({"train", "--data", fixture_path("aspect/train.jsonl"), "--task",
                     "aspect", "--model-out", model});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_NE(t.out.find("36/36"), std::string::npos) << t.out;
  const CliRun c = run({"classify", "--corpus", fixture_path("aspect/comments.jsonl"),
                     "--strategy-aspect", "lexicon,linear", "--aspect-model", model,
                     "--out", dir.path().string()});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  std::istringstream gold(read_file(fixture_path("aspect/comments.jsonl")));
  std::istringstream pred(read_file(dir.file("aspects.jsonl")));
  std::string g;
  std::string p;
  int agree = 0;
  while (std::getline(gold, g) && std::getline(pred, p)) {
    if (nlohmann::json::parse(g)["label"] == nlohmann::json::parse(p)["aspect"]) ++agree;
  }
  EXPECT_EQ(agree, 8);
}

TEST(CliIngestTest, RerunIsByteIdentical) {
  TempDir dir;
  const std::vector<std::string> args = {
      "ingest", "--source-file", fixture_path("ingest/dups100.jsonl"), "--keywords",
      "loan,savings account", "--out", dir.path().string()};
  const CliRun first = run(args);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  const std::string corpus = read_file(dir.file("corpus.jsonl"));
  EXPECT_EQ(count_lines(dir.file("corpus.jsonl")), 83);
  ASSERT_EQ(run(args).code, kExitOk);
  EXPECT_EQ(read_file(dir.file("corpus.jsonl")), corpus);
  const auto manifest =
      nlohmann::json::parse(read_file(dir.file("corpus.jsonl.manifest.json")));
  EXPECT_EQ(manifest["query"], "loan OR \"savings account\"");
}

TEST(CliIngestTest, NeedsOneSourceAndOneQuery) {
  EXPECT_EQ(run({"ingest", "--query", "x"}).code, kExitInvalid);
  EXPECT_EQ(run({"ingest", "--source-file", fixture_path("ingest/dups100.jsonl")}).code,
            kExitInvalid);
}

TEST(CliOutputTest, FailedRunCreatesNothing) {
  TempDir dir;
  const fs::path out = dir.path() / "results";
  EXPECT_EQ(run({"classify", "--corpus", fixture_path("aspect/comments.jsonl"),
                 "--strategy-aspect", "linear", "--out", out.string()})
                .code,
            kExitInvalid);
  EXPECT_FALSE(fs::exists(out));
}

TEST(CliExitCodeTest, Classification) {
  EXPECT_EQ(run({}).code, kExitInvalid);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"filter", "--bogus"}).code, kExitInvalid);
  EXPECT_EQ(run({"filter", "--provider", "magic"}).code, kExitInvalid);
  const CliRun missing = run({"filter", "--corpus", "/nonexistent/corpus.jsonl"});
  EXPECT_EQ(missing.code, kExitInvalid);
  EXPECT_NE(missing.err.find("/nonexistent/corpus.jsonl"), std::string::npos);
  EXPECT_EQ(run({"classify", "--corpus", fixture_path("aspect/comments.jsonl"),
                 "--strategy-aspect", "linear"}).code,
            kExitInvalid);
  EXPECT_EQ(run({"classify", "--corpus", fixture_path("aspect/comments.jsonl"),
                 "--strategy-aspect", "telepathy"}).code,
            kExitInvalid);

  TempDir dir;
  write_file(dir.file("bad.jsonl"), "{\"id\": \"x\"}\n");
  EXPECT_EQ(run({"filter", "--corpus", dir.file("bad.jsonl"), "--out",
                 dir.path().string()}).code,
            kExitInvalid);
  // The bridge is down: a runtime failure, not a validation one.
  EXPECT_EQ(run({"filter", "--corpus", fixture_path("relevance/comments.jsonl"),
                 "--strategy-filter", "external", "--endpoint",
                 ::banklens::testing::dead_url(), "--out", dir.path().string()})
                .code,
            kExitRuntime);
}

}  // namespace
}  // namespace banklens::cli
