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

#include "banklens/fusion/fusion.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "json.hpp"

#include "banklens/core/error.h"

namespace banklens::fusion {
namespace {

bool is_entity(lexicon::Category c) {
  return c != lexicon::Category::kGeneralFinance &&
         c != lexicon::Category::kAspectKeyword;
}

bool overlaps_any(const TokenRange& range,
                  const std::vector<lexicon::EntitySpan>& spans) {
  for (const auto& s : spans) {
    if (s.range.overlaps(range)) return true;
  }
  return false;
}

const lexicon::Lexicon& vocabulary_of(const Resources& resources) {
  return resources.vocabulary ? *resources.vocabulary
                              : lexicon::default_vocabulary();
}

void require(const embed::EmbeddingProvider* provider, const char* role) {
  if (provider == nullptr) {
    throw ArgumentError(std::string("no ") + role + " embedding provider");
  }
}

}  // namespace

void FusionWeights::validate() const {
  for (double w : {yake, keybert, embedrank}) {
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("fusion weights must be finite and >= 0");
    }
  }
}

void PipelineConfig::validate() const {
  weights.validate();
  if (!(boost_factor > 0.0) || !std::isfinite(boost_factor)) {
    throw ConfigError("boost_factor must be > 0");
  }
  if (top_k < 1) throw ConfigError("top_k must be >= 1");
  if (max_ngram < 1) throw ConfigError("max_ngram must be >= 1");
  if (keybert_top_n < 1) throw ConfigError("keybert_top_n must be >= 1");
  try {
    yake.validate();
    embedrank.validate();
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what());
  }
}

std::map<std::string, double> normalize_method_scores(
    const std::vector<ScoredPhrase>& scored) {
  std::map<std::string, double> out;
  if (scored.empty()) return out;
  double lo = scored.front().score;
  double hi = lo;
  for (const ScoredPhrase& s : scored) {
    if (!std::isfinite(s.score)) throw ArgumentError("non-finite method score");
    lo = std::min(lo, s.score);
    hi = std::max(hi, s.score);
  }
  for (const ScoredPhrase& s : scored) {
    double value = 1.0;
    if (hi > lo) {
      value = s.polarity == Polarity::kLowerIsBetter ? (hi - s.score) / (hi - lo)
                                                     : (s.score - lo) / (hi - lo);
    }
    auto [it, inserted] = out.emplace(s.phrase.normalized, value);
    if (!inserted) it->second = std::max(it->second, value);
  }
  return out;
}

double fuse(const std::map<Method, double>& normalized,
            const FusionWeights& weights) {
  double total = 0.0;
  for (const auto& [method, value] : normalized) {
    switch (method) {
      case Method::kYake:
        total += weights.yake * value;
        break;
      case Method::kKeyBert:
        total += weights.keybert * value;
        break;
      case Method::kEmbedRank:
        total += weights.embedrank * value;
        break;
      default:
        break;
    }
  }
  return total;
}

std::optional<KeywordResult> validate_and_boost(
    const KeywordResult& kw, const std::vector<lexicon::EntitySpan>& spans,
    const lexicon::Lexicon& vocab, Language language,
    const PipelineConfig& config) {
  const bool ner = overlaps_any(kw.phrase().range, spans);
  const bool in_vocab = lexicon::vocab_contains(kw.phrase().normalized, vocab,
                                                language);
  if (language == Language::kEn && config.english_discard_unvalidated && !ner &&
      !in_vocab) {
    return std::nullopt;
  }
  return KeywordResult(kw.phrase(), kw.method_scores(), kw.fused_score(), ner,
                       in_vocab, in_vocab, config.boost_factor);
}

std::vector<KeywordResult> rank_keywords(std::vector<KeywordResult> keywords,
                                         int top_k) {
  std::sort(keywords.begin(), keywords.end(),
            [](const KeywordResult& a, const KeywordResult& b) {
              if (a.final_score() != b.final_score()) {
                return a.final_score() > b.final_score();
              }
              if (a.phrase().range.begin != b.phrase().range.begin) {
                return a.phrase().range.begin < b.phrase().range.begin;
              }
              return a.phrase().normalized < b.phrase().normalized;
            });
  if (keywords.size() > static_cast<std::size_t>(top_k)) {
    keywords.erase(keywords.begin() + top_k, keywords.end());
  }
  return keywords;
}

std::vector<lexicon::EntitySpan> entity_spans(const Document& doc,
                                              const Resources& resources) {
  std::vector<lexicon::EntitySpan> spans;
  for (auto& s : lexicon::gazetteer_match(doc, vocabulary_of(resources))) {
    if (is_entity(s.category)) spans.push_back(std::move(s));
  }
  if (resources.ner) {
    for (auto& s : lexicon::side_file_spans(*resources.ner, doc)) {
      spans.push_back(std::move(s));
    }
  }
  return spans;
}

std::vector<KeywordResult> extract_keywords_en(const Document& doc,
                                               const Providers& providers,
                                               const Resources& resources,
                                               const PipelineConfig& config) {
  config.validate();
  std::vector<CandidatePhrase> universe =
      embed::candidate_phrases(doc, config.max_ngram);
  if (universe.empty()) return {};
  require(providers.keybert, "keybert");
  require(providers.embedrank, "embedrank");

  std::set<std::string> keys;
  for (const CandidatePhrase& c : universe) keys.insert(c.normalized);

  std::vector<ScoredPhrase> yake;
  for (ScoredPhrase& s : stat::yake_extract(doc, config.yake)) {
    if (keys.count(s.phrase.normalized)) yake.push_back(std::move(s));
  }
  const embed::EmbeddedCandidates for_embedrank =
      embed::embed_candidates(doc, universe, *providers.embedrank);
  std::vector<ScoredPhrase> keybert;
  if (providers.keybert == providers.embedrank) {
    keybert = embed::cosine_top(for_embedrank, config.keybert_top_n);
  } else {
    keybert = embed::cosine_top(
        embed::embed_candidates(doc, universe, *providers.keybert),
        config.keybert_top_n);
  }
  const std::vector<ScoredPhrase> embedrank = embed::mmr_select(
      for_embedrank, config.embedrank.top_n, config.embedrank.mmr_lambda);

  std::map<std::string, std::map<Method, MethodScore>> found;
  const std::pair<Method, const std::vector<ScoredPhrase>*> lists[] = {
      {Method::kYake, &yake},
      {Method::kKeyBert, &keybert},
      {Method::kEmbedRank, &embedrank}};
  for (const auto& [method, list] : lists) {
    const auto normalized = normalize_method_scores(*list);
    for (const ScoredPhrase& s : *list) {
      found[s.phrase.normalized].emplace(
          method, MethodScore{s.score, normalized.at(s.phrase.normalized)});
    }
  }

  const auto spans = entity_spans(doc, resources);
  const lexicon::Lexicon& vocab = vocabulary_of(resources);
  std::vector<KeywordResult> kept;
  for (const CandidatePhrase& c : universe) {
    auto it = found.find(c.normalized);
    if (it == found.end()) continue;
    std::map<Method, double> normalized;
    for (const auto& [method, score] : it->second) {
      normalized[method] = score.normalized;
    }
    const KeywordResult raw(c, it->second, fuse(normalized, config.weights),
                            false, false, false, config.boost_factor);
    if (auto kw = validate_and_boost(raw, spans, vocab, Language::kEn, config)) {
      kept.push_back(std::move(*kw));
    }
  }
  return rank_keywords(std::move(kept), config.top_k);
}

std::vector<KeywordResult> extract_keywords_si(const Document& doc,
                                               const Providers& providers,
                                               const Resources& resources,
                                               const PipelineConfig& config) {
  config.validate();
  std::vector<CandidatePhrase> universe =
      embed::candidate_phrases(doc, config.max_ngram);
  const auto spans = entity_spans(doc, resources);
  std::set<std::string> keys;
  for (const CandidatePhrase& c : universe) keys.insert(c.normalized);
  for (const auto& span : spans) {
    try {
      CandidatePhrase c = CandidatePhrase::from_document(doc, span.range);
      if (keys.insert(c.normalized).second) universe.push_back(std::move(c));
    } catch (const ValidationError&) {
      // a span that starts or ends on a stopword is not a keyphrase
    }
  }
  if (universe.empty()) return {};
  require(providers.embedrank, "embedrank");

  const embed::EmbeddedCandidates embedded =
      embed::embed_candidates(doc, universe, *providers.embedrank);
  const lexicon::Lexicon& vocab = vocabulary_of(resources);
  std::vector<KeywordResult> kept;
  for (std::size_t i = 0; i < embedded.candidates.size(); ++i) {
    const double cos = embedded.relevance[i];
    const double normalized = std::clamp((cos + 1.0) / 2.0, 0.0, 1.0);
    const KeywordResult raw(embedded.candidates[i],
                            {{Method::kEmbedRank, {cos, normalized}}},
                            config.weights.embedrank * normalized, false, false,
                            false, config.boost_factor);
    if (auto kw = validate_and_boost(raw, spans, vocab, Language::kSi, config)) {
      kept.push_back(std::move(*kw));
    }
  }
  return rank_keywords(std::move(kept), config.top_k);
}

Language route_language(const Document& doc, double threshold) {
  std::size_t letters = 0;
  std::size_t sinhala = 0;
  for (const Token& t : doc.tokens()) {
    if (t.script == Script::kSinhala || t.script == Script::kMixed) {
      ++sinhala;
      ++letters;
    } else if (t.script == Script::kLatin) {
      ++letters;
    }
  }
  if (letters == 0) return Language::kEn;
  return static_cast<double>(sinhala) > threshold * static_cast<double>(letters)
             ? Language::kSi
             : Language::kEn;
}

std::string keywords_json_line(const std::string& doc_id,
                               const std::vector<KeywordResult>& keywords) {
  nlohmann::ordered_json line;
  line["doc_id"] = doc_id;
  line["keywords"] = nlohmann::ordered_json::array();
  for (const KeywordResult& k : keywords) {
    nlohmann::ordered_json methods = nlohmann::ordered_json::object();
    for (const auto& [method, score] : k.method_scores()) {
      methods[std::string(to_string(method))] = score.normalized;
    }
    line["keywords"].push_back({{"phrase", k.phrase().normalized},
                                {"final_score", k.final_score()},
                                {"fused", k.fused_score()},
                                {"methods", methods},
                                {"boosted", k.boosted()},
                                {"ner", k.ner_validated()}});
  }
  return line.dump();
}

}  // namespace banklens::fusion
