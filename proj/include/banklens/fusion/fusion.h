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

#ifndef BANKLENS_FUSION_FUSION_H_
#define BANKLENS_FUSION_FUSION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "banklens/core/scored_phrase.h"
#include "banklens/core/types.h"
#include "banklens/embed/provider.h"
#include "banklens/embed/rank.h"
#include "banklens/lexicon/gazetteer.h"
#include "banklens/lexicon/lexicon.h"
#include "banklens/stat/yake.h"

namespace banklens::fusion {

struct FusionWeights {
  double yake = 2.0;
  double keybert = 3.0;
  double embedrank = 4.0;

  // Throws ConfigError on a negative or non-finite weight.
  void validate() const;
};

struct PipelineConfig {
  FusionWeights weights;
  double boost_factor = 2.0;
  bool english_discard_unvalidated = true;
  int top_k = 10;
  int max_ngram = 3;
  stat::YakeParams yake;
  embed::EmbedRankParams embedrank;
  int keybert_top_n = 10;

  // Throws ConfigError.
  void validate() const;
};

// Min-max scaling of one method's list to [0, 1] with 1 the best, keyed by
// normalized phrase. Lower-is-better lists are flipped first. A list whose
// scores are all equal maps to 1.0.
std::map<std::string, double> normalize_method_scores(
    const std::vector<ScoredPhrase>& scored);

// Weighted sum; a missing method contributes 0.
double fuse(const std::map<Method, double>& normalized,
            const FusionWeights& weights);

// NER check is overlap with any span; the vocabulary check is exact. English
// keywords with neither are dropped when the config says so. Vocabulary
// matches are boosted.
std::optional<KeywordResult> validate_and_boost(
    const KeywordResult& kw, const std::vector<lexicon::EntitySpan>& spans,
    const lexicon::Lexicon& vocab, Language language,
    const PipelineConfig& config);

// Final score descending, then first occurrence, then phrase. Keeps top_k.
std::vector<KeywordResult> rank_keywords(std::vector<KeywordResult> keywords,
                                         int top_k);

struct Providers {
  const embed::EmbeddingProvider* keybert = nullptr;
  const embed::EmbeddingProvider* embedrank = nullptr;
};

struct Resources {
  const lexicon::Lexicon* vocabulary = nullptr;
  // Optional spans from an external NER model, keyed by document id.
  const lexicon::NerSideFile* ner = nullptr;
};

// Gazetteer spans of entity categories plus any side-file spans.
std::vector<lexicon::EntitySpan> entity_spans(const Document& doc,
                                              const Resources& resources);

std::vector<KeywordResult> extract_keywords_en(const Document& doc,
                                               const Providers& providers,
                                               const Resources& resources,
                                               const PipelineConfig& config = {});

// Embedding cosine is the only score: fused = w_embedrank * (cos + 1) / 2.
std::vector<KeywordResult> extract_keywords_si(const Document& doc,
                                               const Providers& providers,
                                               const Resources& resources,
                                               const PipelineConfig& config = {});

// Sinhala when more than `threshold` of the letter-bearing tokens are
// Sinhala or mixed script, English otherwise.
Language route_language(const Document& doc, double threshold = 0.3);

// {"doc_id":..., "keywords":[{"phrase", "final_score", "fused", "methods",
// "boosted", "ner"}]} on one line.
std::string keywords_json_line(const std::string& doc_id,
                               const std::vector<KeywordResult>& keywords);

}  // namespace banklens::fusion

#endif  // BANKLENS_FUSION_FUSION_H_
