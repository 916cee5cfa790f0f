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

#include <algorithm>
#include <random>

#include "banklens/core/error.h"
#include "banklens/eval/metrics.h"
#include "test_util.h"

namespace banklens::eval {
namespace {

const std::vector<std::string> kAB = {"A", "B"};

// Straight from the pair lists, no matrix: for each class count true
// positives, predicted and actual occurrences.
MetricReport brute_force(const std::vector<std::string>& gold,
                         const std::vector<std::string>& pred,
                         const std::vector<std::string>& classes) {
  MetricReport r;
  r.n = static_cast<int>(gold.size());
  int correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += gold[i] == pred[i];
  r.accuracy = static_cast<double>(correct) / r.n;
  for (const std::string& c : classes) {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (pred[i] == c && gold[i] == c) ++tp;
      if (pred[i] == c && gold[i] != c) ++fp;
      if (pred[i] != c && gold[i] == c) ++fn;
    }
    const double p = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
    const double rc = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
    const double f = p + rc == 0.0 ? 0.0 : 2.0 * p * rc / (p + rc);
    r.per_class[c] = {p, rc, f};
    r.precision += p / static_cast<double>(classes.size());
    r.recall += rc / static_cast<double>(classes.size());
    r.f1 += f / static_cast<double>(classes.size());
  }
  return r;
}

TEST(ConfusionTest, Examples) {
  const auto diag = confusion({"A", "B", "A", "B", "B"}, {"A", "B", "A", "B", "B"}, kAB);
  EXPECT_EQ(diag.trace(), 5);
  const auto cm = confusion({"A", "A", "B", "B"}, {"A", "B", "B", "B"}, kAB);
  EXPECT_EQ(cm.counts(), (std::vector<std::vector<int>>{{1, 1}, {0, 2}}));
  const auto empty = confusion({}, {}, kAB);
  EXPECT_EQ(empty.total(), 0);
  EXPECT_EQ(empty.counts(), (std::vector<std::vector<int>>{{0, 0}, {0, 0}}));
}

TEST(ConfusionTest, Errors) {
  EXPECT_THROW(confusion({"A"}, {}, kAB), ArgumentError);
  EXPECT_THROW(confusion({"A"}, {"C"}, kAB), ArgumentError);
  EXPECT_THROW(ConfusionMatrix({"A", "A"}), ArgumentError);
}

TEST(MetricsTest, HandArithmetic) {
  const MetricReport r = metrics(confusion({"A", "A", "B", "B"}, {"A", "B", "B", "B"}, kAB));
  EXPECT_DOUBLE_EQ(r.accuracy, 0.75);
  EXPECT_DOUBLE_EQ(r.per_class.at("A").precision, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class.at("A").recall, 0.5);
  EXPECT_NEAR(r.per_class.at("A").f1, 0.6667, 1e-4);
  // B: precision 2/3, recall 1, f1 0.8
  EXPECT_NEAR(r.per_class.at("B").f1, 0.8, 1e-12);
  EXPECT_NEAR(r.f1, (2.0 / 3.0 + 0.8) / 2.0, 1e-12);
  EXPECT_EQ(r.n, 4);
}

TEST(MetricsTest, PerfectAndNeverPredicted) {
  const MetricReport perfect = metrics(confusion({"A", "B"}, {"A", "B"}, kAB));
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.precision, 1.0);
  EXPECT_EQ(perfect.recall, 1.0);
  EXPECT_EQ(perfect.f1, 1.0);
  const MetricReport never = metrics(confusion({"A", "B"}, {"B", "B"}, kAB));
  EXPECT_EQ(never.per_class.at("A").precision, 0.0);
  EXPECT_EQ(never.per_class.at("A").f1, 0.0);
  EXPECT_THROW(metrics(ConfusionMatrix(kAB)), ArgumentError);
}

TEST(MetricsTest, MatchesBruteForceOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> classes;
    for (int c = 0; c < k; ++c) classes.push_back("c" + std::to_string(c));
    const int n = 1 + static_cast<int>(rng() % 30);
    std::vector<std::string> gold;
    std::vector<std::string> pred;
    for (int i = 0; i < n; ++i) {
      gold.push_back(classes[rng() % classes.size()]);
      pred.push_back(classes[rng() % classes.size()]);
    }
    const MetricReport got = metrics(confusion(gold, pred, classes));
    const MetricReport want = brute_force(gold, pred, classes);
    EXPECT_EQ(got.accuracy, want.accuracy);
    EXPECT_EQ(got.precision, want.precision);
    EXPECT_EQ(got.recall, want.recall);
    EXPECT_EQ(got.f1, want.f1);
    for (const std::string& c : classes) {
      EXPECT_EQ(got.per_class.at(c).precision, want.per_class.at(c).precision);
      EXPECT_EQ(got.per_class.at(c).recall, want.per_class.at(c).recall);
      EXPECT_EQ(got.per_class.at(c).f1, want.per_class.at(c).f1);
    }
  }
}

TEST(MetricsTest, SelfAgreementAndPermutationInvariance) {
  std::mt19937_64 rng(8);
  const std::vector<std::string> classes = {"x", "y", "z"};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> gold;
    std::vector<std::string> pred;
    const int n = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) {
      gold.push_back(classes[rng() % 3]);
      pred.push_back(classes[rng() % 3]);
    }
    EXPECT_EQ(metrics(confusion(gold, gold, classes)).accuracy, 1.0);
    std::vector<std::size_t> order(gold.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::string> g2;
    std::vector<std::string> p2;
    for (std::size_t i : order) {
      g2.push_back(gold[i]);
      p2.push_back(pred[i]);
    }
    EXPECT_EQ(metrics(confusion(gold, pred, classes)).f1,
              metrics(confusion(g2, p2, classes)).f1);
  }
}

using GoldSets = std::vector<std::set<std::string>>;
using Ranked = std::vector<std::vector<std::string>>;

TEST(KeywordEvalTest, SmallCases) {
  const MetricReport exact = keyword_eval(GoldSets{{"a", "b"}}, Ranked{{"a", "b"}}, 2);
  EXPECT_EQ(exact.precision, 1.0);
  EXPECT_EQ(exact.recall, 1.0);
  EXPECT_EQ(exact.f1, 1.0);
  const MetricReport half = keyword_eval(GoldSets{{"a", "b"}}, Ranked{{"a", "c"}}, 2);
  EXPECT_EQ(half.precision, 0.5);
  EXPECT_EQ(half.recall, 0.5);
  EXPECT_EQ(half.accuracy, half.precision);
  EXPECT_THROW(keyword_eval(GoldSets{{"a"}}, Ranked{{"a"}}, 0), ArgumentError);
  EXPECT_THROW(keyword_eval(GoldSets{{}}, Ranked{{"a"}}, 1), ArgumentError);
}

TEST(KeywordEvalTest, FiveDocFixture) {
  const auto gold = read_keyword_file(testing::fixture_path("eval/keyword_gold.jsonl"));
  const auto pred = read_keyword_file(testing::fixture_path("eval/keyword_pred.jsonl"));
  const MetricReport r = keyword_eval(gold, pred, 3);
  // Hits per doc at k=3: 2, 1, 0, skipped, 3 -> 6 hits out of 11 predicted
  // and 8 gold phrases.
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.skipped, 1);
  EXPECT_NEAR(r.precision, 6.0 / 11.0, 1e-12);
  EXPECT_NEAR(r.recall, 6.0 / 8.0, 1e-12);
  EXPECT_NEAR(r.f1, 36.0 / 57.0, 1e-12);
  EXPECT_NEAR(r.accuracy, 6.0 / 11.0, 1e-12);
}

TEST(KeywordEvalTest, MissingPredictionCountsAsEmpty) {
  const std::vector<DocKeywords> gold = {{"d1", {"loan"}}, {"d2", {"atm"}}};
  const std::vector<DocKeywords> pred = {{"d1", {"loan"}}};
  const MetricReport r = keyword_eval(gold, pred, 5);
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 0.5);
}

TEST(RenderTest, DashesForMissingMetrics) {
  const std::vector<TableRow> rows = {
      table_row("Hybrid", metrics(confusion({"A", "A", "B", "B"}, {"A", "B", "B", "B"}, kAB))),
      TableRow{"Remote API", 0.791, std::nullopt, std::nullopt, std::nullopt}};
  const std::string table = render_table(rows);
  EXPECT_NE(table.find("macro-averaged"), std::string::npos);
  std::istringstream lines(table);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all[3].rfind("Hybrid", 0), 0u);
  EXPECT_NE(all[3].find("75.0"), std::string::npos);
  EXPECT_NE(all[4].find("79.1"), std::string::npos);
  EXPECT_EQ(std::count(all[4].begin(), all[4].end(), '-'), 3);
  EXPECT_EQ(std::count(all[3].begin(), all[3].end(), '-'), 0);
  // columns line up
  EXPECT_EQ(all[1].size(), all[3].size());
  EXPECT_EQ(all[3].size(), all[4].size());
  EXPECT_THROW(render_table({}), ArgumentError);
}

TEST(RenderTest, CsvRoundTripAtRenderedPrecision) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TableRow> rows;
  for (int i = 0; i < 20; ++i) {
    TableRow r{"model, \"v" + std::to_string(i) + "\"", u(rng), u(rng), u(rng), u(rng)};
    if (i % 3 == 0) r.recall.reset();
    rows.push_back(r);
  }
  const std::string csv = render_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,accuracy,precision,recall,f1");
  const auto back = parse_csv(csv);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].name, rows[i].name);
    EXPECT_NEAR(*back[i].accuracy, *rows[i].accuracy, 0.0005 + 1e-12);
    EXPECT_EQ(back[i].recall.has_value(), rows[i].recall.has_value());
  }
}

TEST(SplitTest, StratifiedAndSeeded) {
  std::vector<std::string> labels;
  for (int i = 0; i < 50; ++i) labels.push_back("a");
  for (int i = 0; i < 20; ++i) labels.push_back("b");
  for (int i = 0; i < 10; ++i) labels.push_back("c");
  const Split s = stratified_split(labels);
  EXPECT_EQ(s.train.size() + s.test.size(), labels.size());
  std::map<std::string, int> test_counts;
  for (std::size_t i : s.test) ++test_counts[labels[i]];
  EXPECT_EQ(test_counts["a"], 10);
  EXPECT_EQ(test_counts["b"], 4);
  EXPECT_EQ(test_counts["c"], 2);
  std::vector<std::size_t> all = s.train;
  all.insert(all.end(), s.test.begin(), s.test.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i], i);
  EXPECT_EQ(stratified_split(labels).test, s.test);
  EXPECT_NE(stratified_split(labels, 0.2, 7).test, s.test);
  EXPECT_THROW(stratified_split(labels, 1.0), ArgumentError);
}

}  // namespace
}  // namespace banklens::eval
