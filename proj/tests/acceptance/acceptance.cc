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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "banklens/aspect/aspect.h"
#include "banklens/classify/dataset.h"
#include "banklens/classify/linear.h"
#include "banklens/cli/cli.h"
#include "banklens/core/comment_io.h"
#include "banklens/embed/provider.h"
#include "banklens/embed/rank.h"
#include "banklens/eval/metrics.h"
#include "banklens/fusion/fusion.h"
#include "banklens/ingest/ingest.h"
#include "banklens/lexicon/lexicon.h"
#include "banklens/stat/yake.h"
#include "banklens/text/tokenizer.h"
#include "test_util.h"

namespace banklens {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;
using testing::read_file;
using testing::source_path;
using testing::TempDir;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

std::vector<Comment> comments(const std::string& relative) {
  return read_comments(fixture_path(relative));
}

// Vocabulary terms by language, read straight from the shipped TSV files.
std::map<std::string, std::set<Language>> raw_vocabulary() {
  std::map<std::string, std::set<Language>> terms;
  for (const char* file : {"data/lexicon_en.tsv", "data/lexicon_si.tsv"}) {
    std::istringstream in(read_file(source_path(file)));
    for (std::string line; std::getline(in, line);) {
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string> cells;
      std::istringstream row(line);
      for (std::string cell; std::getline(row, cell, '\t');) cells.push_back(cell);
      if (cells.size() < 3) continue;
      terms[lexicon::normalize_term(cells[0])].insert(parse_language(cells[2]));
    }
  }
  return terms;
}

bool oracle_in_vocab(const std::map<std::string, std::set<Language>>& vocab,
                     const std::string& phrase, Language language) {
  const auto it = vocab.find(phrase);
  if (it == vocab.end()) return false;
  return it->second.count(language) > 0 || it->second.count(Language::kMixed) > 0;
}

struct Extracted {
  Language language;
  Document doc;
  std::vector<KeywordResult> keywords;
};

std::vector<Extracted> extract_all(const std::vector<Comment>& corpus,
                                   const embed::EmbeddingProvider& provider,
                                   bool route) {
  const fusion::Providers providers{&provider, &provider};
  const fusion::Resources resources{&lexicon::default_vocabulary(), nullptr};
  std::vector<Extracted> out;
  for (const Comment& c : corpus) {
    Document doc = text::build_document(c.id(), c.text());
    const Language lang = route ? fusion::route_language(doc) : Language::kEn;
    auto keywords = lang == Language::kSi
                        ? fusion::extract_keywords_si(doc, providers, resources)
                        : fusion::extract_keywords_en(doc, providers, resources);
    out.push_back({lang, std::move(doc), std::move(keywords)});
  }
  return out;
}

Outcome fusion_oracle() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const fusion::FusionWeights weights;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const double c = u(rng);
    const double got = fusion::fuse(
        {{Method::kYake, a}, {Method::kKeyBert, b}, {Method::kEmbedRank, c}}, weights);
    worst = std::max(worst, std::abs(got - (2.0 * a + 3.0 * b + 4.0 * c)));
  }
  int order_breaks = 0;
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int set = 0; set < 100; ++set) {
    const int n = 2 + static_cast<int>(rng() % 30);
    std::vector<std::map<Method, double>> candidates;
    for (int i = 0; i < n; ++i) {
      candidates.push_back(
          {{Method::kYake, u(rng)}, {Method::kKeyBert, u(rng)}, {Method::kEmbedRank, u(rng)}});
    }
    const double s = scale(rng);
    fusion::FusionWeights scaled;
    scaled.yake = weights.yake * s;
    scaled.keybert = weights.keybert * s;
    scaled.embedrank = weights.embedrank * s;
    auto order = [&](const fusion::FusionWeights& w) {
      std::vector<double> score;
      for (const auto& m : candidates) score.push_back(fusion::fuse(m, w));
      std::vector<int> idx(static_cast<std::size_t>(n));
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return score[x] > score[y]; });
      return idx;
    };
    if (order(weights) != order(scaled)) ++order_breaks;
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && order_breaks == 0 && elapsed < 1.0,
          "max |fuse - (2a+3b+4c)| = " + fmt(worst) + ", order changes under scaling " +
              std::to_string(order_breaks) + "/100, " + fmt(elapsed) + " s"};
}

Outcome boost_rule() {
  const embed::HashProvider provider(256, 42);
  const auto vocab = raw_vocabulary();
  int matched = 0;
  int violations = 0;
  int total = 0;
  for (const auto& e : extract_all(comments("comments.jsonl"), provider, true)) {
    for (const auto& kw : e.keywords) {
      ++total;
      const bool expected = oracle_in_vocab(vocab, kw.phrase().normalized, e.language);
      if (expected) {
        ++matched;
        if (!kw.boosted() || kw.final_score() != 2.0 * kw.fused_score()) ++violations;
      } else if (kw.boosted() || kw.final_score() != kw.fused_score()) {
        ++violations;
      }
    }
  }
  return {violations == 0 && matched > 0,
          std::to_string(matched) + " vocabulary-matched of " + std::to_string(total) +
              " keywords, " + std::to_string(violations) + " violations"};
}

bool overlaps(const TokenRange& a, const TokenRange& b) {
  return a.begin < b.end && b.begin < a.end;
}

Outcome english_discard() {
  const embed::HashProvider provider(256, 42);
  const auto vocab = raw_vocabulary();
  const auto corpus = comments("english50.jsonl");
  const fusion::Resources resources{&lexicon::default_vocabulary(), nullptr};
  int total = 0;
  int unsound = 0;
  for (const auto& e : extract_all(corpus, provider, false)) {
    const auto spans = fusion::entity_spans(e.doc, resources);
    for (const auto& kw : e.keywords) {
      ++total;
      const bool in_vocab = oracle_in_vocab(vocab, kw.phrase().normalized, Language::kEn);
      const bool ner = std::any_of(spans.begin(), spans.end(), [&](const auto& s) {
        return overlaps(s.range, kw.phrase().range);
      });
      if (!(kw.ner_validated() || kw.vocab_matched()) || !(in_vocab || ner)) ++unsound;
    }
  }
  return {corpus.size() == 50 && total > 0 && unsound == 0,
          std::to_string(total) + " keywords from " + std::to_string(corpus.size()) +
              " comments, " + std::to_string(unsound) + " unvalidated"};
}

Outcome yake_goldens() {
  const auto start = Clock::now();
  double worst = 0.0;
  int mismatched = 0;
  for (const char* name : {"review", "branch", "digital"}) {
    std::vector<std::pair<std::string, double>> golden;
    std::istringstream in(read_file(fixture_path(std::string("yake/") + name + ".golden.tsv")));
    for (std::string line; std::getline(in, line);) {
      const auto tab = line.find('\t');
      golden.emplace_back(line.substr(0, tab), std::stod(line.substr(tab + 1)));
    }
    text::NormalizationConfig raw;
    raw.lowercase_latin = false;
    raw.strip_symbols = false;
    const Document d = text::build_document(
        name, read_file(fixture_path(std::string("yake/") + name + ".txt")), raw);
    const auto got = stat::yake_extract(d);
    if (got.size() != golden.size()) ++mismatched;
    for (std::size_t i = 0; i < std::min(got.size(), golden.size()); ++i) {
      if (got[i].phrase.normalized != golden[i].first) ++mismatched;
      worst = std::max(worst, std::abs(got[i].score - golden[i].second));
    }
  }
  stat::YakeParams top5;
  top5.top_n = 5;
  std::set<std::string> top;
  for (const auto& s : stat::yake_extract(
           text::build_document("review", read_file(fixture_path("yake/review.txt"))), top5)) {
    top.insert(s.phrase.normalized);
  }
  const bool both = top.count("savings account") && top.count("interest rates");
  const double elapsed = seconds_since(start);
  return {mismatched == 0 && worst <= 1e-6 && both && elapsed < 1.0,
          "max score error " + fmt(worst) + ", " + std::to_string(mismatched) +
              " phrase mismatches, review top-5 " + (both ? "has" : "lacks") +
              " both terms, " + fmt(elapsed) + " s"};
}

Outcome embedrank_example() {
  const embed::FileProvider provider(fixture_path("embed/vectors.jsonl"));
  embed::EmbedRankParams params;
  params.top_n = 2;
  std::set<std::string> top;
  const Document d = text::build_document("d", "Customer support delayed my loan approval");
  for (const auto& s : embed::embedrank(d, provider, params)) top.insert(s.phrase.normalized);
  std::string listed;
  for (const auto& p : top) listed += (listed.empty() ? "" : ", ") + p;
  return {top == std::set<std::string>{"customer support", "loan approval"},
          "top-2 {" + listed + "}"};
}

Outcome classifier_numerics() {
  const auto start = Clock::now();
  const auto j = nlohmann::json::parse(read_file(fixture_path("classify/separable.json")));
  const auto classes = j["classes"].get<std::vector<std::string>>();
  const auto labels = j["labels"].get<std::vector<int>>();
  const auto points = j["points"].get<std::vector<std::vector<double>>>();
  std::vector<classify::Example> examples;
  for (std::size_t i = 0; i < points.size(); ++i) {
    examples.push_back({EmbeddingVector(points[i]), labels[i]});
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    classify::Matrix w(classes.size(), std::vector<double>(points[0].size()));
    std::vector<double> b(classes.size());
    for (auto& row : w) {
      for (double& x : row) x = u(rng);
    }
    for (double& x : b) x = u(rng);
    const classify::LinearModel model(w, b, classes, "fixture");
    worst = std::max(worst, classify::gradient_check(model, examples, classify::TrainConfig{}.l2));
  }
  std::vector<double> history;
  const auto model = classify::train(examples, classes, "fixture", {}, &history);
  bool monotone = true;
  for (std::size_t i = 1; i < history.size(); ++i) monotone = monotone && history[i] <= history[i - 1];
  int correct = 0;
  for (const auto& ex : examples) correct += classify::predict(model, ex.features).label == ex.label;
  const double elapsed = seconds_since(start);
  return {worst < 1e-5 && monotone && correct == static_cast<int>(examples.size()) &&
              elapsed < 5.0,
          "max gradient rel. error " + fmt(worst) + ", loss " +
              (monotone ? "non-increasing" : "increased") + " over " +
              std::to_string(history.size()) + " steps, training accuracy " +
              std::to_string(correct) + "/" + std::to_string(examples.size()) + ", " +
              fmt(elapsed) + " s"};
}

eval::MetricReport pair_list_metrics(const std::vector<std::string>& gold,
                                     const std::vector<std::string>& pred,
                                     const std::vector<std::string>& classes) {
  eval::MetricReport r;
  r.n = static_cast<int>(gold.size());
  int correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += gold[i] == pred[i];
  r.accuracy = static_cast<double>(correct) / r.n;
  for (const std::string& c : classes) {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      tp += pred[i] == c && gold[i] == c;
      fp += pred[i] == c && gold[i] != c;
      fn += pred[i] != c && gold[i] == c;
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

Outcome metric_oracles() {
  std::mt19937_64 rng(2024);
  int differing = 0;
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
    const auto got = eval::metrics(eval::confusion(gold, pred, classes));
    const auto want = pair_list_metrics(gold, pred, classes);
    bool same = got.accuracy == want.accuracy && got.precision == want.precision &&
                got.recall == want.recall && got.f1 == want.f1;
    for (const auto& c : classes) {
      same = same && got.per_class.at(c).precision == want.per_class.at(c).precision &&
             got.per_class.at(c).recall == want.per_class.at(c).recall &&
             got.per_class.at(c).f1 == want.per_class.at(c).f1;
    }
    differing += !same;
  }
  const auto small =
      eval::metrics(eval::confusion({"A", "A", "B", "B"}, {"A", "B", "B", "B"}, {"A", "B"}));
  const double f1a = small.per_class.at("A").f1;
  return {differing == 0 && small.accuracy == 0.75 && std::abs(f1a - 0.6667) <= 1e-4,
          std::to_string(differing) + "/200 matrices differ, [[1,1],[0,2]] accuracy " +
              fmt(small.accuracy) + ", class-A F1 " + fmt(f1a, 6)};
}

Outcome aspect_fixture() {
  const embed::HashProvider provider(256, 42);
  const auto data = classify::read_labeled(fixture_path("aspect/train.jsonl"));
  std::vector<std::string> classes;
  for (AspectLabel a : kAllAspects) classes.emplace_back(to_string(a));
  const auto model = classify::train(classify::build_examples(data, classes, provider),
                                     classes, provider.id());
  aspect::AspectDeps deps;
  deps.keywords = &lexicon::default_aspect_keywords();
  deps.provider = &provider;
  deps.model = &model;
  const auto corpus = comments("aspect/comments.jsonl");
  const auto records = aspect::classify_corpus(
      corpus, {aspect::Strategy::kLexicon, aspect::Strategy::kLinear}, deps);
  std::vector<std::string> gold;
  std::istringstream in(read_file(fixture_path("aspect/comments.jsonl")));
  for (std::string line; std::getline(in, line);) {
    gold.push_back(nlohmann::json::parse(line)["label"].get<std::string>());
  }
  int agree = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string got =
        records[i].decision ? std::string(to_string(records[i].decision->label))
                            : std::string(aspect::kUnclassified);
    agree += got == gold[i];
  }
  const std::vector<std::string> table_rows = {"Digital Banking", "Loans & Credit Services",
                                               "Customer Support", "Transactions"};
  bool verbatim = records.size() >= 4;
  for (std::size_t i = 0; verbatim && i < 4; ++i) {
    verbatim = records[i].decision && to_string(records[i].decision->label) == table_rows[i];
  }
  return {agree == 8 && records.size() == 8 && verbatim,
          std::to_string(agree) + "/" + std::to_string(records.size()) +
              " agree, verbatim rows " + (verbatim ? "as labelled" : "differ")};
}

int run_tool(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"banklens"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

Outcome pipeline_determinism() {
  TempDir a;
  TempDir b;
  const std::string corpus = fixture_path("comments.jsonl");
  const auto start = Clock::now();
  const int first = run_tool({"pipeline", "--corpus", corpus, "--lang", "auto", "--provider",
                              "hash", "--out", a.path().string()});
  const double elapsed = seconds_since(start);
  const int second = run_tool({"pipeline", "--corpus", corpus, "--lang", "auto",
                               "--provider", "hash", "--out", b.path().string()});
  if (first != 0 || second != 0) return {false, "pipeline exited with an error"};
  int differing = 0;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a.path())) {
    ++files;
    const fs::path other = b.path() / entry.path().filename();
    if (!fs::exists(other) || read_file(entry.path().string()) != read_file(other.string())) {
      ++differing;
    }
  }
  const auto report = nlohmann::json::parse(read_file(a.file("report.json")));
  const int total = report["filter"]["total"];
  const int kept = static_cast<int>(read_comments(a.file("relevant.jsonl")).size());
  const int removed = static_cast<int>(read_comments(a.file("quarantine.jsonl")).size());
  const bool conserved = kept + removed == total && total == 100;
  return {elapsed < 10.0 && differing == 0 && files > 0 && conserved,
          fmt(elapsed) + " s, " + std::to_string(differing) + "/" + std::to_string(files) +
              " files differ, kept " + std::to_string(kept) + " + removed " +
              std::to_string(removed) + " = " + std::to_string(total)};
}

Outcome ingest_idempotence() {
  TempDir dir;
  const std::string path = dir.file("corpus.jsonl");
  std::string first;
  int removed = 0;
  int persisted = 0;
  bool identical = true;
  for (int round = 0; round < 2; ++round) {
    ingest::FileSource source(fixture_path("ingest/dups100.jsonl"));
    const auto result = ingest::ingest(source, "bank");
    ingest::persist(path, result, "bank", source.name(), ingest::utc_timestamp());
    const std::string bytes = read_file(path);
    if (round == 0) {
      first = bytes;
      removed = result.report.duplicates_removed;
      persisted = result.report.persisted;
    } else {
      identical = bytes == first;
    }
  }
  std::set<std::string> texts;
  for (const Comment& c : read_comments(path)) texts.insert(c.text());
  const bool unique = static_cast<int>(texts.size()) == persisted;
  return {identical && removed == 17 && persisted == 83 && unique,
          std::string("rerun ") + (identical ? "byte-identical" : "differs") + ", " +
              std::to_string(removed) + "/17 planted duplicates removed, " +
              std::to_string(persisted) + " persisted"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace banklens

int main() {
  using banklens::Criterion;
  const std::vector<Criterion> criteria = {
      {"fusion oracle and scaling invariance", banklens::fusion_oracle},
      {"vocabulary boost rule", banklens::boost_rule},
      {"English discard soundness", banklens::english_discard},
      {"YAKE golden files", banklens::yake_goldens},
      {"EmbedRank example sentence", banklens::embedrank_example},
      {"classifier numerics", banklens::classifier_numerics},
      {"metric oracles", banklens::metric_oracles},
      {"aspect fixture cascade", banklens::aspect_fixture},
      {"end-to-end determinism", banklens::pipeline_determinism},
      {"ingest idempotence", banklens::ingest_idempotence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    banklens::Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
