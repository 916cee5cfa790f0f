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
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "banklens/aspect/aspect.h"
#include "banklens/classify/client.h"
#include "banklens/classify/dataset.h"
#include "banklens/classify/linear.h"
#include "banklens/core/comment_io.h"
#include "banklens/core/error.h"
#include "banklens/embed/provider.h"
#include "banklens/embed/remote.h"
#include "banklens/eval/metrics.h"
#include "banklens/fusion/fusion.h"
#include "banklens/ingest/ingest.h"
#include "banklens/ingest/youtube.h"
#include "banklens/lexicon/gazetteer.h"
#include "banklens/lexicon/lexicon.h"
#include "banklens/relevance/filter.h"
#include "banklens/text/tokenizer.h"

namespace banklens::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

struct Options {
  // shared
  std::string corpus;
  std::string out = "out";
  std::string lexicon_en;
  std::string lexicon_si;
  std::string aspect_keywords;
  std::string ner;
  std::string provider = "hash";
  int hash_dims = 256;
  std::uint64_t hash_seed = 42;
  std::string vectors;
  std::string endpoint;
  std::string model;
  std::string strategy_filter = "lexicon";
  std::string strategy_aspect = "lexicon";
  std::string relevance_model;
  std::string aspect_model;
  std::string relevance_train;
  std::string aspect_train;
  int top_k = 10;
  int jobs = 1;
  int min_hits = 1;
  std::string lang = "auto";
  double lang_threshold = 0.3;
  int max_in_flight = 4;

  // ingest
  std::string source_file;
  bool live = false;
  std::string query;
  std::string keywords;
  int max_pages = 0;
  std::string output;

  // extract
  std::string text;

  // train
  std::string data;
  std::string train_task = "aspect";
  std::string model_out;
  int epochs = 300;
  double learning_rate = 0.1;
  double l2 = 1e-4;

  // eval
  std::string gold;
  std::string pred;
  std::string eval_task = "aspect";
  int k = 10;
  std::string name;
  std::string csv;
};

const std::vector<std::string>& relevance_classes() {
  static const std::vector<std::string> names = {
      std::string(to_string(RelevanceLabel::kRelevant)),
      std::string(to_string(RelevanceLabel::kIrrelevant))};
  return names;
}

const std::vector<std::string>& aspect_classes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (AspectLabel a : kAllAspects) v.emplace_back(to_string(a));
    return v;
  }();
  return names;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) parts.push_back(item.substr(b, e - b + 1));
  }
  return parts;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path.string());
  f << content;
  if (!f) throw IoError("cannot write " + path.string());
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results land wherever
// fn puts them, so callers index by i to keep input order.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first) first = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

// Resources built on demand from the options.
class Context {
 public:
  explicit Context(const Options& o) : o_(o) {}

  const Options& options() const { return o_; }

  const lexicon::Lexicon& vocabulary() {
    if (o_.lexicon_en.empty() && o_.lexicon_si.empty()) {
      return lexicon::default_vocabulary();
    }
    if (!vocabulary_) {
      std::vector<lexicon::LexiconEntry> entries =
          (o_.lexicon_en.empty() ? lexicon::Lexicon::packaged("lexicon_en.tsv")
                                 : lexicon::Lexicon::load(o_.lexicon_en))
              .entries();
      const lexicon::Lexicon si = o_.lexicon_si.empty()
                                      ? lexicon::Lexicon::packaged("lexicon_si.tsv")
                                      : lexicon::Lexicon::load(o_.lexicon_si);
      entries.insert(entries.end(), si.entries().begin(), si.entries().end());
      vocabulary_.emplace(std::move(entries));
    }
    return *vocabulary_;
  }

  const lexicon::Lexicon& aspect_keywords() {
    if (o_.aspect_keywords.empty()) return lexicon::default_aspect_keywords();
    if (!aspect_keywords_) aspect_keywords_ = lexicon::Lexicon::load(o_.aspect_keywords);
    return *aspect_keywords_;
  }

  const lexicon::NerSideFile* ner() {
    if (o_.ner.empty()) return nullptr;
    if (!ner_) ner_ = lexicon::load_ner_side_file(o_.ner);
    return &*ner_;
  }

  const embed::EmbeddingProvider& provider() {
    if (provider_) return *provider_;
    if (o_.provider == "hash") {
      provider_ = std::make_unique<embed::HashProvider>(o_.hash_dims, o_.hash_seed);
    } else if (o_.provider == "file") {
      require(!o_.vectors.empty(), "--provider file needs --vectors");
      provider_ = std::make_unique<embed::FileProvider>(o_.vectors);
    } else {
      require(!o_.endpoint.empty(), "--provider remote needs --endpoint");
      provider_ = std::make_unique<embed::RemoteProvider>(
          embed::RemoteOptions{o_.endpoint, o_.model});
    }
    return *provider_;
  }

  const classify::ClassifierClient& client() {
    if (!client_) {
      require(!o_.endpoint.empty(), "the external strategy needs --endpoint");
      classify::ClassifierOptions opts;
      opts.endpoint = o_.endpoint;
      opts.max_in_flight = o_.max_in_flight;
      client_ = std::make_unique<classify::HttpClassifierClient>(opts);
    }
    return *client_;
  }

  const classify::LinearModel& relevance_model() {
    if (!relevance_model_) {
      relevance_model_ = load_or_train(o_.relevance_model, o_.relevance_train,
                                       relevance_classes(), "relevance");
    }
    return *relevance_model_;
  }

  const classify::LinearModel& aspect_model() {
    if (!aspect_model_) {
      aspect_model_ = load_or_train(o_.aspect_model, o_.aspect_train,
                                    aspect_classes(), "aspect");
    }
    return *aspect_model_;
  }

  const aspect::Centroids& centroids() {
    if (!centroids_) {
      require(!o_.aspect_train.empty(), "the centroid strategy needs --aspect-train");
      const auto data = classify::read_labeled(o_.aspect_train);
      std::vector<std::string> texts;
      std::vector<std::string> labels;
      for (const auto& row : data) {
        texts.push_back(row.text);
        labels.push_back(row.label);
      }
      centroids_ = aspect::build_centroids(texts, labels, provider());
    }
    return *centroids_;
  }

  fusion::PipelineConfig pipeline_config() const {
    fusion::PipelineConfig config;
    config.top_k = o_.top_k;
    config.validate();
    return config;
  }

  classify::TrainConfig train_config() const {
    classify::TrainConfig config;
    config.epochs = o_.epochs;
    config.learning_rate = o_.learning_rate;
    config.l2 = o_.l2;
    config.validate();
    return config;
  }

 private:
  classify::LinearModel load_or_train(const std::string& model_path,
                                      const std::string& train_path,
                                      const std::vector<std::string>& classes,
                                      const std::string& task) {
    if (!model_path.empty()) return classify::LinearModel::load(model_path);
    require(!train_path.empty(), "the linear " + task + " strategy needs --" + task +
                                     "-model or --" + task + "-train");
    const auto data = classify::read_labeled(train_path);
    return classify::train(classify::build_examples(data, classes, provider()),
                           classes, provider().id(), train_config());
  }

  const Options& o_;
  std::optional<lexicon::Lexicon> vocabulary_;
  std::optional<lexicon::Lexicon> aspect_keywords_;
  std::optional<lexicon::NerSideFile> ner_;
  std::unique_ptr<embed::EmbeddingProvider> provider_;
  std::unique_ptr<classify::ClassifierClient> client_;
  std::optional<classify::LinearModel> relevance_model_;
  std::optional<classify::LinearModel> aspect_model_;
  std::optional<aspect::Centroids> centroids_;
};

std::vector<Comment> load_corpus(const Options& o, const std::string& command) {
  require(!o.corpus.empty(), command + " needs --corpus");
  return read_comments(o.corpus);
}

fs::path output_dir(const Options& o) {
  require(!o.out.empty(), "--out must not be empty");
  return o.out;
}

// Called only once a stage has results, so failed runs leave no directories.
void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
}

// ---- filter

relevance::FilterOutcome run_filter(Context& ctx, const std::vector<Comment>& comments,
                                    const fs::path& dir) {
  const Options& o = ctx.options();
  const auto strategy = relevance::try_parse_strategy(o.strategy_filter);
  require(strategy.has_value(), "unknown filter strategy '" + o.strategy_filter + "'");
  relevance::FilterDeps deps;
  deps.min_hits = o.min_hits;
  switch (*strategy) {
    case relevance::Strategy::kLexicon:
      deps.vocabulary = &ctx.vocabulary();
      break;
    case relevance::Strategy::kLinear:
      deps.provider = &ctx.provider();
      deps.model = &ctx.relevance_model();
      break;
    case relevance::Strategy::kExternal:
      deps.client = &ctx.client();
      break;
  }
  relevance::FilterOutcome outcome = relevance::filter_corpus(comments, *strategy, deps);

  fs::create_directories(dir);
  write_comments(dir / "relevant.jsonl", outcome.kept);
  relevance::write_quarantine(dir / "quarantine.jsonl", outcome);
  std::vector<ordered_json> decisions;
  for (std::size_t i = 0; i < comments.size(); ++i) {
    const auto& d = outcome.decisions[i];
    ordered_json row;
    row["id"] = comments[i].id();
    row["relevance"] = to_string(d.label);
    row["strategy"] = to_string(d.strategy);
    row["confidence"] = d.confidence ? ordered_json(*d.confidence) : ordered_json(nullptr);
    row["matched_terms"] = d.matched_terms;
    decisions.push_back(std::move(row));
  }
  write_json_lines(dir / "decisions.jsonl", decisions);
  write_text(dir / "filter_report.json",
             relevance::report_json(outcome.report).dump(2) + "\n");
  return outcome;
}

// ---- extract

struct ExtractSummary {
  int documents = 0;
  int english = 0;
  int sinhala = 0;
  int keywords = 0;
};

Language pick_language(const Options& o, const Document& doc) {
  if (o.lang == "en") return Language::kEn;
  if (o.lang == "si") return Language::kSi;
  return fusion::route_language(doc, o.lang_threshold);
}

std::vector<KeywordResult> extract_one(Context& ctx, const Document& doc,
                                       Language language,
                                       const fusion::PipelineConfig& config) {
  const embed::EmbeddingProvider& provider = ctx.provider();
  const fusion::Providers providers{&provider, &provider};
  const fusion::Resources resources{&ctx.vocabulary(), ctx.ner()};
  return language == Language::kSi
             ? fusion::extract_keywords_si(doc, providers, resources, config)
             : fusion::extract_keywords_en(doc, providers, resources, config);
}

ExtractSummary run_extract(Context& ctx, const std::vector<Comment>& comments,
                           const fs::path& path) {
  const Options& o = ctx.options();
  const fusion::PipelineConfig config = ctx.pipeline_config();
  // Build shared resources before the workers start.
  ctx.provider();
  ctx.vocabulary();
  ctx.ner();

  const std::size_t n = comments.size();
  std::vector<std::string> lines(n);
  std::vector<Language> languages(n);
  std::vector<int> counts(n);
  parallel_for(n, o.jobs, [&](std::size_t i) {
    const Document doc = text::build_document(comments[i].id(), comments[i].text());
    languages[i] = pick_language(o, doc);
    const auto keywords = extract_one(ctx, doc, languages[i], config);
    counts[i] = static_cast<int>(keywords.size());
    lines[i] = fusion::keywords_json_line(comments[i].id(), keywords);
  });

  ensure_parent(path);
  std::string content;
  ExtractSummary summary;
  summary.documents = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    content += lines[i] + "\n";
    (languages[i] == Language::kSi ? summary.sinhala : summary.english)++;
    summary.keywords += counts[i];
  }
  write_text(path, content);
  return summary;
}

ordered_json summary_json(const ExtractSummary& s) {
  ordered_json j;
  j["documents"] = s.documents;
  j["english"] = s.english;
  j["sinhala"] = s.sinhala;
  j["keywords"] = s.keywords;
  return j;
}

// ---- classify

std::vector<aspect::Strategy> aspect_chain(const Options& o) {
  std::vector<aspect::Strategy> chain;
  for (const std::string& name : split_list(o.strategy_aspect)) {
    const auto s = aspect::try_parse_strategy(name);
    require(s.has_value(), "unknown aspect strategy '" + name + "'");
    chain.push_back(*s);
  }
  require(!chain.empty(), "--strategy-aspect is empty");
  return chain;
}

std::vector<aspect::AspectRecord> run_classify(Context& ctx,
                                               const std::vector<Comment>& comments,
                                               const fs::path& path) {
  const auto chain = aspect_chain(ctx.options());
  aspect::AspectDeps deps;
  for (aspect::Strategy s : chain) {
    switch (s) {
      case aspect::Strategy::kLexicon:
        deps.keywords = &ctx.aspect_keywords();
        break;
      case aspect::Strategy::kLinear:
        deps.provider = &ctx.provider();
        deps.model = &ctx.aspect_model();
        break;
      case aspect::Strategy::kCentroid:
        deps.provider = &ctx.provider();
        deps.centroids = &ctx.centroids();
        break;
      case aspect::Strategy::kExternal:
        deps.client = &ctx.client();
        break;
    }
  }
  auto records = aspect::classify_corpus(comments, chain, deps);
  std::vector<ordered_json> rows;
  for (const auto& r : records) rows.push_back(aspect::record_json(r));
  ensure_parent(path);
  write_json_lines(path, rows);
  return records;
}

ordered_json aspect_summary(const std::vector<aspect::AspectRecord>& records) {
  ordered_json counts;
  for (const auto& name : aspect_classes()) counts[name] = 0;
  counts[std::string(aspect::kUnclassified)] = 0;
  std::map<std::string, int> by_strategy;
  for (const auto& r : records) {
    if (r.decision) {
      counts[std::string(to_string(r.decision->label))] =
          counts[std::string(to_string(r.decision->label))].get<int>() + 1;
      ++by_strategy[std::string(to_string(r.decision->strategy))];
    } else {
      counts[std::string(aspect::kUnclassified)] =
          counts[std::string(aspect::kUnclassified)].get<int>() + 1;
    }
  }
  ordered_json j;
  j["comments"] = records.size();
  j["counts"] = counts;
  j["by_strategy"] = by_strategy;
  return j;
}

// ---- subcommands

int cmd_ingest(const Options& o, std::ostream& out) {
  require(o.live != !o.source_file.empty(),
          "ingest needs exactly one of --source-file and --live");
  require(o.query.empty() != o.keywords.empty(),
          "ingest needs exactly one of --query and --keywords");
  const std::string query =
      o.query.empty()
          ? lexicon::build_boolean_query(split_list(o.keywords), lexicon::QueryMode::kAnyOf)
          : o.query;
  std::unique_ptr<ingest::CommentSource> source;
  if (o.live) {
    ingest::YouTubeOptions yt;
    yt.api_key = ingest::youtube_key_from_env();
    source = std::make_unique<ingest::YouTubeSource>(yt);
  } else {
    source = std::make_unique<ingest::FileSource>(o.source_file);
  }
  ingest::IngestConfig config;
  config.max_pages = o.max_pages;
  const ingest::IngestResult result = ingest::ingest(*source, query, config);
  const fs::path path = o.output.empty() ? output_dir(o) / "corpus.jsonl" : fs::path(o.output);
  ensure_parent(path);
  ingest::persist(path, result, query, source->name(), ingest::utc_timestamp());
  out << "ingest: " << result.report.persisted << " comments written to "
      << path.string() << "\n"
      << ingest::report_json(result.report).dump(2) << "\n";
  return result.report.errors.empty() ? kExitOk : kExitRuntime;
}

int cmd_filter(Context& ctx, std::ostream& out) {
  const Options& o = ctx.options();
  const auto comments = load_corpus(o, "filter");
  const auto outcome = run_filter(ctx, comments, output_dir(o));
  out << "filter (" << to_string(outcome.report.strategy) << "): kept "
      << outcome.report.kept << " of " << outcome.report.total << ", removed "
      << outcome.report.removed << "\n";
  return kExitOk;
}

int cmd_extract(Context& ctx, std::ostream& out) {
  const Options& o = ctx.options();
  require(o.text.empty() != o.corpus.empty(),
          "extract needs exactly one of --text and --corpus");
  if (!o.text.empty()) {
    const Document doc = text::build_document("text", o.text);
    const auto keywords =
        extract_one(ctx, doc, pick_language(o, doc), ctx.pipeline_config());
    for (std::size_t i = 0; i < keywords.size(); ++i) {
      std::ostringstream score;
      score.precision(6);
      score << std::fixed << keywords[i].final_score();
      out << (i + 1) << ". " << keywords[i].phrase().normalized << "\t" << score.str()
          << (keywords[i].boosted() ? "\tboosted" : "") << "\n";
    }
    return kExitOk;
  }
  const auto comments = read_comments(o.corpus);
  const fs::path path = output_dir(o) / "keywords.jsonl";
  const ExtractSummary s = run_extract(ctx, comments, path);
  out << "extract: " << s.keywords << " keywords from " << s.documents
      << " documents (" << s.english << " en, " << s.sinhala << " si) written to "
      << path.string() << "\n";
  return kExitOk;
}

int cmd_classify(Context& ctx, std::ostream& out) {
  const Options& o = ctx.options();
  const auto comments = load_corpus(o, "classify");
  const fs::path path = output_dir(o) / "aspects.jsonl";
  const auto records = run_classify(ctx, comments, path);
  out << "classify: " << records.size() << " comments written to " << path.string()
      << "\n"
      << aspect_summary(records).dump(2) << "\n";
  return kExitOk;
}

int cmd_train(Context& ctx, std::ostream& out) {
  const Options& o = ctx.options();
  require(!o.data.empty(), "train needs --data");
  require(o.train_task == "aspect" || o.train_task == "relevance",
          "--task must be aspect or relevance");
  const auto& classes = o.train_task == "aspect" ? aspect_classes() : relevance_classes();
  const auto data = classify::read_labeled(o.data);
  const auto examples = classify::build_examples(data, classes, ctx.provider());
  const classify::LinearModel model =
      classify::train(examples, classes, ctx.provider().id(), ctx.train_config());
  int correct = 0;
  for (const auto& ex : examples) {
    if (classify::predict(model, ex.features).label == ex.label) ++correct;
  }
  const fs::path path = o.model_out.empty()
                            ? output_dir(o) / (o.train_task + "_model.json")
                            : fs::path(o.model_out);
  ensure_parent(path);
  model.save(path);
  out << "train (" << o.train_task << "): " << examples.size() << " examples, final loss "
      << model.final_loss() << ", training accuracy " << correct << "/"
      << examples.size() << ", model written to " << path.string() << "\n";
  return kExitOk;
}

std::vector<json> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<json> rows;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json row = json::parse(line);
      if (!row.is_object()) throw ParseError(path + ": expected an object", number);
      rows.push_back(std::move(row));
    } catch (const json::exception& e) {
      throw ParseError(path + ": " + e.what(), number);
    }
  }
  return rows;
}

// The label sits under the task name, or under "label" as in training data.
const json* row_label(const json& row, const std::string& task) {
  for (const char* key : {task.c_str(), "label"}) {
    const auto it = row.find(key);
    if (it != row.end() && it->is_string()) return &*it;
  }
  return nullptr;
}

std::string row_id(const json& row, const std::string& path) {
  const auto it = row.find("id");
  if (it == row.end()) throw ParseError(path + ": row without \"id\"");
  return it->is_string() ? it->get<std::string>() : it->dump();
}

int cmd_eval(const Options& o, std::ostream& out) {
  require(!o.gold.empty() && !o.pred.empty(), "eval needs --gold and --pred");
  eval::MetricReport report;
  std::string averaging = "macro";
  if (o.eval_task == "keywords") {
    report = eval::keyword_eval(eval::read_keyword_file(o.gold),
                                eval::read_keyword_file(o.pred), o.k);
    averaging = "micro";
  } else {
    require(o.eval_task == "aspect" || o.eval_task == "relevance",
            "--task must be aspect, relevance or keywords");
    std::map<std::string, std::string> predicted;
    for (const json& row : read_rows(o.pred)) {
      if (const json* label = row_label(row, o.eval_task)) {
        predicted[row_id(row, o.pred)] = *label;
      }
    }
    std::vector<std::string> gold;
    std::vector<std::string> pred;
    int missing = 0;
    for (const json& row : read_rows(o.gold)) {
      const json* label = row_label(row, o.eval_task);
      if (label == nullptr) continue;
      const auto p = predicted.find(row_id(row, o.gold));
      if (p == predicted.end()) {
        ++missing;
        continue;
      }
      gold.push_back(*label);
      pred.push_back(p->second);
    }
    std::vector<std::string> classes =
        o.eval_task == "aspect" ? aspect_classes() : relevance_classes();
    const std::string unclassified(aspect::kUnclassified);
    if (o.eval_task == "aspect" &&
        std::find(pred.begin(), pred.end(), unclassified) != pred.end()) {
      classes.push_back(unclassified);
    }
    report = eval::metrics(eval::confusion(gold, pred, classes));
    report.skipped = missing;
  }
  const std::vector<eval::TableRow> rows = {
      eval::table_row(o.name.empty() ? o.eval_task : o.name, report)};
  out << eval::render_table(rows, averaging);
  out << "n=" << report.n << " skipped=" << report.skipped << "\n";
  if (!o.csv.empty()) {
    ensure_parent(o.csv);
    write_text(o.csv, eval::render_csv(rows));
  }
  return kExitOk;
}

int cmd_pipeline(Context& ctx, std::ostream& out) {
  const Options& o = ctx.options();
  const auto comments = load_corpus(o, "pipeline");
  const fs::path dir = output_dir(o);
  const auto outcome = run_filter(ctx, comments, dir);
  const ExtractSummary extract = run_extract(ctx, outcome.kept, dir / "keywords.jsonl");
  const auto records = run_classify(ctx, outcome.kept, dir / "aspects.jsonl");

  ordered_json report;
  report["corpus"] = fs::path(o.corpus).filename().string();
  report["provider"] = ctx.provider().id();
  report["lang"] = o.lang;
  report["strategy_filter"] = o.strategy_filter;
  report["strategy_aspect"] = split_list(o.strategy_aspect);
  report["top_k"] = o.top_k;
  report["filter"] = relevance::report_json(outcome.report);
  report["extract"] = summary_json(extract);
  report["aspect"] = aspect_summary(records);
  write_text(dir / "report.json", report.dump(2) + "\n");

  out << "pipeline: " << outcome.report.total << " comments, " << outcome.report.kept
      << " relevant, " << extract.keywords << " keywords, " << records.size()
      << " aspect records; outputs in " << dir.string() << "\n";
  return kExitOk;
}

bool is_validation_error(const std::exception& e) {
  return dynamic_cast<const ArgumentError*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
         dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IoError*>(&e) ||
         dynamic_cast<const ValidationError*>(&e) ||
         dynamic_cast<const IntegrityError*>(&e) ||
         dynamic_cast<const DecodeError*>(&e) ||
         dynamic_cast<const fs::filesystem_error*>(&e);
}

void add_shared_options(CLI::App& app, Options& o) {
  app.add_option("--corpus", o.corpus, "comment JSON-lines file");
  app.add_option("--out", o.out, "output directory")->capture_default_str();
  app.add_option("--lexicon-en", o.lexicon_en, "English domain lexicon (TSV)");
  app.add_option("--lexicon-si", o.lexicon_si, "Sinhala domain lexicon (TSV)");
  app.add_option("--aspect-keywords", o.aspect_keywords, "aspect keyword map (TSV)");
  app.add_option("--ner", o.ner, "NER side file (JSON-lines)");
  app.add_option("--provider", o.provider, "embedding provider")
      ->check(CLI::IsMember({"hash", "file", "remote"}))
      ->capture_default_str();
  app.add_option("--hash-dims", o.hash_dims, "hash provider dimensions")
      ->check(CLI::Range(8, 1 << 16))
      ->capture_default_str();
  app.add_option("--hash-seed", o.hash_seed, "hash provider seed")->capture_default_str();
  app.add_option("--vectors", o.vectors, "fixture vectors for --provider file");
  app.add_option("--endpoint", o.endpoint, "embedding/classifier bridge URL");
  app.add_option("--model", o.model, "bridge embedding model");
  app.add_option("--strategy-filter", o.strategy_filter,
                 "relevance strategy: lexicon, linear or external")
      ->capture_default_str();
  app.add_option("--strategy-aspect", o.strategy_aspect,
                 "comma-separated aspect chain of lexicon, linear, centroid, external")
      ->capture_default_str();
  app.add_option("--relevance-model", o.relevance_model, "trained relevance model");
  app.add_option("--aspect-model", o.aspect_model, "trained aspect model");
  app.add_option("--relevance-train", o.relevance_train,
                 "labelled relevance data to train on when no model is given");
  app.add_option("--aspect-train", o.aspect_train,
                 "labelled aspect data for the linear and centroid strategies");
  app.add_option("--top-k", o.top_k, "keywords per document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", o.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--min-hits", o.min_hits, "lexicon filter threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--lang", o.lang, "auto, en or si")
      ->check(CLI::IsMember({"auto", "en", "si"}))
      ->capture_default_str();
  app.add_option("--lang-threshold", o.lang_threshold,
                 "Sinhala share above which --lang auto routes to Sinhala")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--max-in-flight", o.max_in_flight, "concurrent classifier requests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Banking comment analysis: ingest, filter, extract, classify, eval"};
  app.name("banklens");
  app.set_config("--config", "", "flat key=value file named after the long flags");
  app.require_subcommand(1);
  app.fallthrough();
  add_shared_options(app, o);

  CLI::App* ingest_cmd = app.add_subcommand("ingest", "fetch, clean and persist comments");
  ingest_cmd->add_option("--source-file", o.source_file, "file-backed comment pages");
  ingest_cmd->add_flag("--live", o.live, "use the live video comment API");
  ingest_cmd->add_option("--query", o.query, "search query");
  ingest_cmd->add_option("--keywords", o.keywords, "comma-separated terms OR-ed together");
  ingest_cmd->add_option("--max-pages", o.max_pages, "page limit, 0 for none")
      ->check(CLI::NonNegativeNumber);
  ingest_cmd->add_option("--output", o.output, "corpus path (default <out>/corpus.jsonl)");

  CLI::App* filter_cmd = app.add_subcommand("filter", "split relevant from irrelevant comments");
  CLI::App* extract_cmd = app.add_subcommand("extract", "extract ranked keywords");
  extract_cmd->add_option("--text", o.text, "a single text instead of --corpus");
  CLI::App* classify_cmd = app.add_subcommand("classify", "assign service aspects");

  CLI::App* train_cmd = app.add_subcommand("train", "train a linear classifier head");
  train_cmd->add_option("--data", o.data, "labelled JSON-lines");
  train_cmd->add_option("--task", o.train_task, "aspect or relevance")
      ->check(CLI::IsMember({"aspect", "relevance"}))
      ->capture_default_str();
  train_cmd->add_option("--model-out", o.model_out, "model path");
  train_cmd->add_option("--epochs", o.epochs)->check(CLI::PositiveNumber)->capture_default_str();
  train_cmd->add_option("--lr", o.learning_rate)->capture_default_str();
  train_cmd->add_option("--l2", o.l2)->capture_default_str();

  CLI::App* eval_cmd = app.add_subcommand("eval", "score predictions against gold labels");
  eval_cmd->add_option("--gold", o.gold, "gold JSON-lines");
  eval_cmd->add_option("--pred", o.pred, "predicted JSON-lines");
  eval_cmd->add_option("--task", o.eval_task, "aspect, relevance or keywords")
      ->check(CLI::IsMember({"aspect", "relevance", "keywords"}))
      ->capture_default_str();
  eval_cmd->add_option("--k", o.k, "keyword cut-off")->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--name", o.name, "row label in the table");
  eval_cmd->add_option("--csv", o.csv, "also write the table as CSV");

  CLI::App* pipeline_cmd =
      app.add_subcommand("pipeline", "filter, extract and classify in one run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Context ctx(o);
    if (ingest_cmd->parsed()) return cmd_ingest(o, out);
    if (filter_cmd->parsed()) return cmd_filter(ctx, out);
    if (extract_cmd->parsed()) return cmd_extract(ctx, out);
    if (classify_cmd->parsed()) return cmd_classify(ctx, out);
    if (train_cmd->parsed()) return cmd_train(ctx, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (pipeline_cmd->parsed()) return cmd_pipeline(ctx, out);
    return kExitInvalid;
  } catch (const std::exception& e) {
    const bool invalid = is_validation_error(e);
    err << "banklens: " << (invalid ? "invalid input: " : "error: ") << e.what() << "\n";
    return invalid ? kExitInvalid : kExitRuntime;
  }
}

}  // namespace banklens::cli
