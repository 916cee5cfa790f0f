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

#ifndef BANKLENS_ASPECT_ASPECT_H_
#define BANKLENS_ASPECT_ASPECT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "banklens/classify/client.h"
#include "banklens/classify/linear.h"
#include "banklens/core/types.h"
#include "banklens/embed/provider.h"
#include "banklens/lexicon/lexicon.h"

namespace banklens::aspect {

enum class Strategy { kLexicon, kLinear, kCentroid, kExternal };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> try_parse_strategy(std::string_view name);

struct AspectDecision {
  AspectLabel label = AspectLabel::kCustomerSupport;
  Strategy strategy = Strategy::kLexicon;
  std::optional<double> confidence;
  std::map<AspectLabel, int> hit_counts;   // lexicon only
  std::vector<std::string> matched_terms;  // lexicon only
};

// Distinct aspect-keyword hits per aspect, argmax, ties to the earlier
// aspect. Throws UnclassifiableError on zero hits and ConfigError when the
// lexicon has no aspect keywords.
AspectDecision lexicon_aspect(const Document& doc, const lexicon::Lexicon& keywords);

// Throws ConfigError unless the model's classes are the six aspects and it
// was trained with `provider`.
std::vector<AspectDecision> linear_aspect(const std::vector<Document>& docs,
                                          const embed::EmbeddingProvider& provider,
                                          const classify::LinearModel& model);
AspectDecision linear_aspect(const Document& doc,
                             const embed::EmbeddingProvider& provider,
                             const classify::LinearModel& model);

struct Centroids {
  std::vector<AspectLabel> labels;
  std::vector<EmbeddingVector> vectors;
  std::string provider_id;
};

// Per-aspect mean embedding of labelled texts. Throws ArgumentError for a
// label that is not an aspect or an aspect without examples.
Centroids build_centroids(const std::vector<std::string>& texts,
                          const std::vector<std::string>& labels,
                          const embed::EmbeddingProvider& provider);

// Throws ConfigError for a provider mismatch.
std::vector<AspectDecision> centroid_aspect(const std::vector<Document>& docs,
                                            const embed::EmbeddingProvider& provider,
                                            const Centroids& centroids);

// Throws RemoteError.
std::vector<AspectDecision> external_aspect(const classify::ClassifierClient& client,
                                            const std::vector<std::string>& texts);
AspectDecision external_aspect(const classify::ClassifierClient& client,
                               const std::string& text);

struct AspectDeps {
  const lexicon::Lexicon* keywords = nullptr;  // null means the packaged map
  const embed::EmbeddingProvider* provider = nullptr;
  const classify::LinearModel* model = nullptr;
  const Centroids* centroids = nullptr;
  const classify::ClassifierClient* client = nullptr;
};

struct AspectRecord {
  Comment comment;
  std::optional<AspectDecision> decision;  // empty means Unclassified
  std::vector<std::string> errors;         // one per failed strategy
};

inline constexpr std::string_view kUnclassified = "Unclassified";

// Tries the chain in order per comment. A comment moves on to the next
// strategy only when the current one cannot classify it or fails for it.
// Throws ConfigError for an empty chain or a missing dependency.
std::vector<AspectRecord> classify_corpus(const std::vector<Comment>& comments,
                                          const std::vector<Strategy>& chain,
                                          const AspectDeps& deps);

// {"id","text","aspect","strategy","confidence"} plus "errors" when any.
nlohmann::ordered_json record_json(const AspectRecord& record);

}  // namespace banklens::aspect

#endif  // BANKLENS_ASPECT_ASPECT_H_
