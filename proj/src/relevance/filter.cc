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

#include "banklens/relevance/filter.h"

#include <algorithm>
#include <set>

#include "banklens/core/comment_io.h"
#include "banklens/core/error.h"
#include "banklens/lexicon/gazetteer.h"
#include "banklens/text/tokenizer.h"

namespace banklens::relevance {
namespace {

std::vector<RelevanceLabel> model_labels(const embed::EmbeddingProvider& provider,
                                         const classify::LinearModel& model) {
  if (model.provider_id() != provider.id()) {
    throw ConfigError("model was trained with provider '" + model.provider_id() +
                      "' but '" + provider.id() + "' is configured");
  }
  std::vector<RelevanceLabel> labels;
  for (const std::string& name : model.class_names()) {
    const auto label = try_parse_relevance(name);
    if (!label) throw ConfigError("model class '" + name + "' is not a relevance label");
    labels.push_back(*label);
  }
  return labels;
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kLexicon: return "lexicon";
    case Strategy::kLinear: return "linear";
    case Strategy::kExternal: return "external";
  }
  return "lexicon";
}

std::optional<Strategy> try_parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kLexicon, Strategy::kLinear, Strategy::kExternal}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

FilterDecision lexicon_filter(const Document& doc, const lexicon::Lexicon& vocab,
                              int min_hits) {
  FilterDecision out;
  out.strategy = Strategy::kLexicon;
  std::set<std::string> seen;
  for (const lexicon::EntitySpan& span : lexicon::gazetteer_match(doc, vocab)) {
    if (seen.insert(span.matched_term).second) {
      out.matched_terms.push_back(span.matched_term);
    }
  }
  out.label = static_cast<int>(out.matched_terms.size()) >= min_hits
                  ? RelevanceLabel::kRelevant
                  : RelevanceLabel::kIrrelevant;
  return out;
}

std::vector<FilterDecision> linear_filter(const std::vector<Document>& docs,
                                          const embed::EmbeddingProvider& provider,
                                          const classify::LinearModel& model) {
  const std::vector<RelevanceLabel> labels = model_labels(provider, model);
  std::vector<std::string> texts;
  texts.reserve(docs.size());
  for (const Document& d : docs) texts.push_back(d.raw_text());
  const std::vector<EmbeddingVector> vectors = provider.embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.id() + " returned " + std::to_string(vectors.size()) +
                        " vectors for " + std::to_string(texts.size()) + " texts");
  }
  std::vector<FilterDecision> out;
  out.reserve(docs.size());
  for (const EmbeddingVector& v : vectors) {
    const classify::Prediction p = classify::predict(model, v);
    FilterDecision d;
    d.strategy = Strategy::kLinear;
    d.label = labels[static_cast<std::size_t>(p.label)];
    d.confidence = p.probabilities[static_cast<std::size_t>(p.label)];
    out.push_back(std::move(d));
  }
  return out;
}

FilterDecision linear_filter(const Document& doc,
                             const embed::EmbeddingProvider& provider,
                             const classify::LinearModel& model) {
  return linear_filter(std::vector<Document>{doc}, provider, model).front();
}

std::vector<FilterDecision> external_filter(const classify::ClassifierClient& client,
                                            const std::vector<std::string>& texts) {
  std::vector<FilterDecision> out;
  if (texts.empty()) return out;
  const auto replies = client.classify(classify::Task::kRelevance, texts);
  if (replies.size() != texts.size()) {
    throw RemoteError("classifier returned " + std::to_string(replies.size()) +
                      " labels for " + std::to_string(texts.size()) + " texts");
  }
  for (const classify::RemoteLabel& r : replies) {
    const auto label = try_parse_relevance(r.label);
    if (!label) throw RemoteError("unknown relevance label '" + r.label + "'");
    FilterDecision d;
    d.strategy = Strategy::kExternal;
    d.label = *label;
    d.confidence = r.confidence;
    out.push_back(std::move(d));
  }
  return out;
}

FilterDecision external_filter(const classify::ClassifierClient& client,
                               const std::string& text) {
  return external_filter(client, std::vector<std::string>{text}).front();
}

FilterOutcome filter_corpus(const std::vector<Comment>& comments,
                            Strategy strategy, const FilterDeps& deps) {
  if (strategy == Strategy::kLinear && (!deps.provider || !deps.model)) {
    throw ConfigError("linear relevance filter needs a provider and a model");
  }
  if (strategy == Strategy::kExternal && !deps.client) {
    throw ConfigError("external relevance filter needs a classifier endpoint");
  }
  if (deps.min_hits < 1) throw ConfigError("min_hits must be >= 1");

  std::vector<Document> docs;
  docs.reserve(comments.size());
  for (const Comment& c : comments) docs.push_back(text::build_document(c.id(), c.text()));

  FilterOutcome out;
  out.report.strategy = strategy;
  switch (strategy) {
    case Strategy::kLexicon: {
      const lexicon::Lexicon& vocab =
          deps.vocabulary ? *deps.vocabulary : lexicon::default_vocabulary();
      for (const Document& d : docs) {
        out.decisions.push_back(lexicon_filter(d, vocab, deps.min_hits));
        for (const std::string& t : out.decisions.back().matched_terms) {
          ++out.report.term_counts[t];
        }
      }
      break;
    }
    case Strategy::kLinear:
      if (!docs.empty()) out.decisions = linear_filter(docs, *deps.provider, *deps.model);
      break;
    case Strategy::kExternal: {
      std::vector<std::string> texts;
      for (const Document& d : docs) texts.push_back(d.raw_text());
      out.decisions = external_filter(*deps.client, texts);
      break;
    }
  }

  for (std::size_t i = 0; i < comments.size(); ++i) {
    if (out.decisions[i].label == RelevanceLabel::kRelevant) {
      out.kept.push_back(comments[i]);
    } else {
      out.removed.push_back(comments[i]);
    }
  }
  out.report.total = static_cast<int>(comments.size());
  out.report.kept = static_cast<int>(out.kept.size());
  out.report.removed = static_cast<int>(out.removed.size());
  return out;
}

nlohmann::ordered_json report_json(const FilterReport& report) {
  nlohmann::ordered_json j;
  j["total"] = report.total;
  j["kept"] = report.kept;
  j["removed"] = report.removed;
  j["strategy"] = std::string(to_string(report.strategy));
  if (report.strategy == Strategy::kLexicon) j["term_counts"] = report.term_counts;
  return j;
}

void write_quarantine(const std::filesystem::path& path,
                      const FilterOutcome& outcome) {
  std::vector<nlohmann::ordered_json> rows;
  const std::string by(to_string(outcome.report.strategy));
  for (const Comment& c : outcome.removed) {
    nlohmann::ordered_json j = comment_to_json(c);
    j["removed_by"] = by;
    rows.push_back(std::move(j));
  }
  write_json_lines(path, rows);
}

}  // namespace banklens::relevance
