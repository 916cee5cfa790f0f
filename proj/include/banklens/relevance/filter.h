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

#ifndef BANKLENS_RELEVANCE_FILTER_H_
#define BANKLENS_RELEVANCE_FILTER_H_

#include <filesystem>
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

namespace banklens::relevance {

enum class Strategy { kLexicon, kLinear, kExternal };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> try_parse_strategy(std::string_view name);

struct FilterDecision {
  RelevanceLabel label = RelevanceLabel::kIrrelevant;
  Strategy strategy = Strategy::kLexicon;
  std::optional<double> confidence;
  std::vector<std::string> matched_terms;  // lexicon strategy only
};

// Relevant iff the document holds at least `min_hits` distinct vocabulary
// terms. Terms are recorded in order of first occurrence.
FilterDecision lexicon_filter(const Document& doc, const lexicon::Lexicon& vocab,
                              int min_hits = 1);

// Throws ConfigError when the model was trained in another embedding space
// or its classes are not relevance labels.
FilterDecision linear_filter(const Document& doc,
                             const embed::EmbeddingProvider& provider,
                             const classify::LinearModel& model);
std::vector<FilterDecision> linear_filter(const std::vector<Document>& docs,
                                          const embed::EmbeddingProvider& provider,
                                          const classify::LinearModel& model);

// Throws RemoteError.
FilterDecision external_filter(const classify::ClassifierClient& client,
                               const std::string& text);
std::vector<FilterDecision> external_filter(const classify::ClassifierClient& client,
                                            const std::vector<std::string>& texts);

struct FilterDeps {
  const lexicon::Lexicon* vocabulary = nullptr;  // null means the packaged one
  int min_hits = 1;
  const embed::EmbeddingProvider* provider = nullptr;
  const classify::LinearModel* model = nullptr;
  const classify::ClassifierClient* client = nullptr;
};

struct FilterReport {
  int total = 0;
  int kept = 0;
  int removed = 0;
  Strategy strategy = Strategy::kLexicon;
  // Lexicon: how many comments each vocabulary term appeared in.
  std::map<std::string, int> term_counts;
};

struct FilterOutcome {
  std::vector<Comment> kept;
  std::vector<Comment> removed;
  std::vector<FilterDecision> decisions;  // one per input comment
  FilterReport report;
};

// Builds a document per comment and applies one strategy. Input order is
// kept on both sides. Throws ConfigError when the strategy's dependency is
// missing; strategy errors propagate.
FilterOutcome filter_corpus(const std::vector<Comment>& comments,
                            Strategy strategy, const FilterDeps& deps);

nlohmann::ordered_json report_json(const FilterReport& report);

// Removed comments as comment JSON lines plus "removed_by".
void write_quarantine(const std::filesystem::path& path,
                      const FilterOutcome& outcome);

}  // namespace banklens::relevance

#endif  // BANKLENS_RELEVANCE_FILTER_H_
