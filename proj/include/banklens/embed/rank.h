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

#ifndef BANKLENS_EMBED_RANK_H_
#define BANKLENS_EMBED_RANK_H_

#include <vector>

#include "banklens/core/scored_phrase.h"
#include "banklens/core/types.h"
#include "banklens/embed/provider.h"

namespace banklens::embed {

struct EmbedRankParams {
  int top_n = 10;
  double mmr_lambda = 0.65;
  int max_ngram = 3;

  // Throws ArgumentError when a field is out of range.
  void validate() const;
};

// Every window of 1..max_ngram tokens inside one sentence whose first and
// last tokens are letter-bearing non-stopwords. Duplicates by normalized
// text keep the first occurrence.
std::vector<CandidatePhrase> candidate_phrases(const Document& doc,
                                               int max_ngram);

// Candidates with their vectors and their cosine to the whole document.
struct EmbeddedCandidates {
  std::vector<CandidatePhrase> candidates;
  std::vector<EmbeddingVector> vectors;
  std::vector<double> relevance;
};

EmbeddedCandidates embed_candidates(const Document& doc,
                                    std::vector<CandidatePhrase> candidates,
                                    const EmbeddingProvider& provider);

// Greedy maximal marginal relevance. Scores are the document cosines of the
// picked candidates, in pick order.
std::vector<ScoredPhrase> mmr_select(const EmbeddedCandidates& embedded,
                                     int top_n, double lambda);

// Plain cosine ranking, descending, ties in candidate order.
std::vector<ScoredPhrase> cosine_top(const EmbeddedCandidates& embedded,
                                     int top_n);

std::vector<ScoredPhrase> embedrank(const Document& doc,
                                    const EmbeddingProvider& provider,
                                    const EmbedRankParams& params = {});

std::vector<ScoredPhrase> keybert_extract(const Document& doc,
                                          const EmbeddingProvider& provider,
                                          int top_n = 10, int max_ngram = 3);

}  // namespace banklens::embed

#endif  // BANKLENS_EMBED_RANK_H_
