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

#include "banklens/aspect/aspect.h"

#include <algorithm>
#include <set>
#include <utility>

#include "banklens/core/error.h"
#include "banklens/lexicon/gazetteer.h"
#include "banklens/text/tokenizer.h"

namespace banklens::aspect {
namespace {

void check_provider(const embed::EmbeddingProvider& provider, const std::string& id) {
  if (id != provider.id()) {
    throw ConfigError("model was built with provider '" + id + "' but '" +
                      provider.id() + "' is configured");
  }
}

std::vector<AspectLabel> model_aspects(const classify::LinearModel& model) {
  std::vector<AspectLabel> labels;
  for (const std::string& name : model.class_names()) {
    const auto label = try_parse_aspect(name);
    if (!label) throw ConfigError("model class '" + name + "' is not an aspect");
    labels.push_back(*label);
  }
  const std::set<AspectLabel> distinct(labels.begin(), labels.end());
  if (labels.size() != kAllAspects.size() || distinct.size() != kAllAspects.size()) {
    throw ConfigError("aspect model must have exactly the six aspect classes");
  }
  return labels;
}

std::vector<EmbeddingVector> embed_docs(const std::vector<Document>& docs,
                                        const embed::EmbeddingProvider& provider) {
  std::vector<std::string> texts;
  texts.reserve(docs.size());
  for (const Document& d : docs) texts.push_back(d.raw_text());
  std::vector<EmbeddingVector> vectors = provider.embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.id() + " returned " + std::to_string(vectors.size()) +
                        " vectors for " + std::to_string(texts.size()) + " texts");
  }
  return vectors;
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kLexicon: return "lexicon";
    case Strategy::kLinear: return "linear";
    case Strategy::kCentroid: return "centroid";
    case Strategy::kExternal: return "external";
  }
  return "lexicon";
}

std::optional<Strategy> try_parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::kLexicon, Strategy::kLinear, Strategy::kCentroid,
                     Strategy::kExternal}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

AspectDecision lexicon_aspect(const Document& doc, const lexicon::Lexicon& keywords) {
  if (keywords.select(lexicon::Category::kAspectKeyword, Language::kMixed).empty()) {
    throw ConfigError("lexicon has no aspect keywords");
  }
  AspectDecision out;
  out.strategy = Strategy::kLexicon;
  std::set<std::string> seen;
  for (const lexicon::EntitySpan& span : lexicon::gazetteer_match(doc, keywords)) {
    const lexicon::LexiconEntry* entry = keywords.find(span.matched_term);
    if (!entry || entry->category != lexicon::Category::kAspectKeyword || !entry->aspect) {
      continue;
    }
    if (!seen.insert(span.matched_term).second) continue;
    out.matched_terms.push_back(span.matched_term);
    ++out.hit_counts[*entry->aspect];
  }
  if (out.hit_counts.empty()) {
    throw UnclassifiableError("no aspect keywords in '" + doc.raw_text() + "'");
  }
  int best = 0;
  for (AspectLabel a : kAllAspects) {
    const auto it = out.hit_counts.find(a);
    if (it != out.hit_counts.end() && it->second > best) {
      best = it->second;
      out.label = a;
    }
  }
  return out;
}

std::vector<AspectDecision> linear_aspect(const std::vector<Document>& docs,
                                          const embed::EmbeddingProvider& provider,
                                          const classify::LinearModel& model) {
  check_provider(provider, model.provider_id());
  const std::vector<AspectLabel> labels = model_aspects(model);
  std::vector<AspectDecision> out;
  if (docs.empty()) return out;
  for (const EmbeddingVector& v : embed_docs(docs, provider)) {
    const classify::Prediction p = classify::predict(model, v);
    AspectDecision d;
    d.strategy = Strategy::kLinear;
    d.label = labels[static_cast<std::size_t>(p.label)];
    d.confidence = p.probabilities[static_cast<std::size_t>(p.label)];
    out.push_back(std::move(d));
  }
  return out;
}

AspectDecision linear_aspect(const Document& doc,
                             const embed::EmbeddingProvider& provider,
                             const classify::LinearModel& model) {
  return linear_aspect(std::vector<Document>{doc}, provider, model).front();
}

Centroids build_centroids(const std::vector<std::string>& texts,
                          const std::vector<std::string>& labels,
                          const embed::EmbeddingProvider& provider) {
  if (texts.size() != labels.size()) {
    throw ArgumentError("texts and labels differ in length");
  }
  std::vector<std::string> normalized;
  std::vector<classify::Example> examples;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const auto label = try_parse_aspect(labels[i]);
    if (!label) throw ArgumentError("'" + labels[i] + "' is not an aspect");
    normalized.push_back(text::normalize_text(texts[i]));
    examples.push_back({EmbeddingVector({0.0}), static_cast<int>(*label)});
  }
  std::vector<EmbeddingVector> vectors = provider.embed(normalized);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.id() + " returned the wrong number of vectors");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    examples[i].features = std::move(vectors[i]);
  }
  Centroids out;
  out.labels.assign(kAllAspects.begin(), kAllAspects.end());
  out.vectors = classify::class_centroids(examples, static_cast<int>(kAllAspects.size()));
  out.provider_id = provider.id();
  return out;
}

std::vector<AspectDecision> centroid_aspect(const std::vector<Document>& docs,
                                            const embed::EmbeddingProvider& provider,
                                            const Centroids& centroids) {
  check_provider(provider, centroids.provider_id);
  std::vector<AspectDecision> out;
  if (docs.empty()) return out;
  for (const EmbeddingVector& v : embed_docs(docs, provider)) {
    AspectDecision d;
    d.strategy = Strategy::kCentroid;
    d.label = centroids.labels[static_cast<std::size_t>(
        classify::centroid_classify(v, centroids.vectors))];
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<AspectDecision> external_aspect(const classify::ClassifierClient& client,
                                            const std::vector<std::string>& texts) {
  std::vector<AspectDecision> out;
  if (texts.empty()) return out;
  const auto replies = client.classify(classify::Task::kAspect, texts);
  if (replies.size() != texts.size()) {
    throw RemoteError("classifier returned " + std::to_string(replies.size()) +
                      " labels for " + std::to_string(texts.size()) + " texts");
  }
  for (const classify::RemoteLabel& r : replies) {
    const auto label = try_parse_aspect(r.label);
    if (!label) throw RemoteError("'" + r.label + "' is not one of the six aspects");
    AspectDecision d;
    d.strategy = Strategy::kExternal;
    d.label = *label;
    d.confidence = r.confidence;
    out.push_back(std::move(d));
  }
  return out;
}

AspectDecision external_aspect(const classify::ClassifierClient& client,
                               const std::string& text) {
  return external_aspect(client, std::vector<std::string>{text}).front();
}

std::vector<AspectRecord> classify_corpus(const std::vector<Comment>& comments,
                                          const std::vector<Strategy>& chain,
                                          const AspectDeps& deps) {
  if (chain.empty()) throw ConfigError("aspect strategy chain is empty");
  for (Strategy s : chain) {
    if ((s == Strategy::kLinear && (!deps.provider || !deps.model)) ||
        (s == Strategy::kCentroid && (!deps.provider || !deps.centroids)) ||
        (s == Strategy::kExternal && !deps.client)) {
      throw ConfigError("aspect strategy '" + std::string(to_string(s)) +
                        "' is missing its dependencies");
    }
  }
  const lexicon::Lexicon& keywords =
      deps.keywords ? *deps.keywords : lexicon::default_aspect_keywords();

  std::vector<AspectRecord> records;
  std::vector<Document> docs;
  records.reserve(comments.size());
  docs.reserve(comments.size());
  for (const Comment& c : comments) {
    records.push_back({c, std::nullopt, {}});
    docs.push_back(text::build_document(c.id(), c.text()));
  }

  std::vector<std::size_t> pending(comments.size());
  for (std::size_t i = 0; i < pending.size(); ++i) pending[i] = i;
  for (Strategy strategy : chain) {
    if (pending.empty()) break;
    const std::string name(to_string(strategy));
    std::vector<std::size_t> still;
    if (strategy == Strategy::kLexicon) {
      for (std::size_t i : pending) {
        try {
          records[i].decision = lexicon_aspect(docs[i], keywords);
        } catch (const UnclassifiableError& e) {
          records[i].errors.push_back(name + ": " + e.what());
          still.push_back(i);
        }
      }
      pending = std::move(still);
      continue;
    }
    std::vector<Document> batch;
    for (std::size_t i : pending) batch.push_back(docs[i]);
    try {
      std::vector<AspectDecision> decisions;
      if (strategy == Strategy::kLinear) {
        decisions = linear_aspect(batch, *deps.provider, *deps.model);
      } else if (strategy == Strategy::kCentroid) {
        decisions = centroid_aspect(batch, *deps.provider, *deps.centroids);
      } else {
        std::vector<std::string> texts;
        for (const Document& d : batch) texts.push_back(d.raw_text());
        decisions = external_aspect(*deps.client, texts);
      }
      for (std::size_t k = 0; k < pending.size(); ++k) {
        records[pending[k]].decision = std::move(decisions[k]);
      }
      pending.clear();
    } catch (const Error& e) {
      for (std::size_t i : pending) records[i].errors.push_back(name + ": " + e.what());
    }
  }
  return records;
}

nlohmann::ordered_json record_json(const AspectRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.comment.id();
  j["text"] = record.comment.text();
  if (record.decision) {
    j["aspect"] = std::string(to_string(record.decision->label));
    j["strategy"] = std::string(to_string(record.decision->strategy));
    j["confidence"] = record.decision->confidence
                          ? nlohmann::ordered_json(*record.decision->confidence)
                          : nullptr;
  } else {
    j["aspect"] = std::string(kUnclassified);
    j["strategy"] = nullptr;
    j["confidence"] = nullptr;
  }
  if (!record.errors.empty()) j["errors"] = record.errors;
  return j;
}

}  // namespace banklens::aspect
