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

#include "banklens/embed/rank.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "banklens/core/error.h"
#include "banklens/core/utf8.h"
#include "banklens/embed/similarity.h"
#include "banklens/text/unicode.h"

namespace banklens::embed {
namespace {

bool has_letter(const Token& token) {
  for (char32_t c : decode_utf8(token.surface)) {
    if (text::is_letter(c)) return true;
  }
  return false;
}

ScoredPhrase scored(const EmbeddedCandidates& e, std::size_t i) {
  return {e.candidates[i], e.relevance[i], Polarity::kHigherIsBetter};
}

}  // namespace

void EmbedRankParams::validate() const {
  if (top_n < 1) throw ArgumentError("top_n must be >= 1");
  if (max_ngram < 1) throw ArgumentError("max_ngram must be >= 1");
  if (!(mmr_lambda >= 0.0 && mmr_lambda <= 1.0)) {
    throw ArgumentError("mmr_lambda must lie in [0, 1]");
  }
}

std::vector<CandidatePhrase> candidate_phrases(const Document& doc,
                                               int max_ngram) {
  if (max_ngram < 1) throw ArgumentError("max_ngram must be >= 1");
  const auto& tokens = doc.tokens();
  std::vector<bool> edge(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    edge[i] = !tokens[i].is_stopword && has_letter(tokens[i]);
  }
  std::vector<CandidatePhrase> out;
  std::set<std::string> seen;
  for (const TokenRange& sentence : doc.sentences()) {
    for (std::size_t b = sentence.begin; b < sentence.end; ++b) {
      if (!edge[b]) continue;
      const std::size_t last =
          std::min(sentence.end, b + static_cast<std::size_t>(max_ngram));
      for (std::size_t e = b + 1; e <= last; ++e) {
        if (!edge[e - 1]) continue;
        CandidatePhrase phrase = CandidatePhrase::from_document(doc, {b, e});
        if (seen.insert(phrase.normalized).second) {
          out.push_back(std::move(phrase));
        }
      }
    }
  }
  return out;
}

EmbeddedCandidates embed_candidates(const Document& doc,
                                    std::vector<CandidatePhrase> candidates,
                                    const EmbeddingProvider& provider) {
  EmbeddedCandidates out;
  if (candidates.empty()) return out;
  std::vector<std::string> texts = {doc.raw_text()};
  for (const CandidatePhrase& c : candidates) texts.push_back(c.normalized);
  std::vector<EmbeddingVector> vectors = provider.embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.id() + ": returned " +
                        std::to_string(vectors.size()) + " vectors for " +
                        std::to_string(texts.size()) + " texts");
  }
  const EmbeddingVector doc_vector = vectors.front();
  out.candidates = std::move(candidates);
  out.vectors.assign(std::make_move_iterator(vectors.begin() + 1),
                     std::make_move_iterator(vectors.end()));
  for (const EmbeddingVector& v : out.vectors) {
    out.relevance.push_back(cosine(v, doc_vector));
  }
  return out;
}

std::vector<ScoredPhrase> mmr_select(const EmbeddedCandidates& embedded,
                                     int top_n, double lambda) {
  const std::size_t n = embedded.candidates.size();
  const std::size_t want = std::min(n, static_cast<std::size_t>(top_n));
  std::vector<bool> taken(n, false);
  // max cosine to anything picked so far
  std::vector<double> redundancy(n, 0.0);
  std::vector<ScoredPhrase> out;
  while (out.size() < want) {
    std::size_t best = n;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double value =
          lambda * embedded.relevance[i] - (1.0 - lambda) * redundancy[i];
      if (value > best_value) {
        best_value = value;
        best = i;
      }
    }
    taken[best] = true;
    out.push_back(scored(embedded, best));
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double sim = cosine(embedded.vectors[i], embedded.vectors[best]);
      redundancy[i] = out.size() == 1 ? sim : std::max(redundancy[i], sim);
    }
  }
  return out;
}

std::vector<ScoredPhrase> cosine_top(const EmbeddedCandidates& embedded,
                                     int top_n) {
  std::vector<std::size_t> order(embedded.candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return embedded.relevance[a] > embedded.relevance[b];
  });
  order.resize(std::min(order.size(), static_cast<std::size_t>(top_n)));
  std::vector<ScoredPhrase> out;
  for (std::size_t i : order) out.push_back(scored(embedded, i));
  return out;
}

std::vector<ScoredPhrase> embedrank(const Document& doc,
                                    const EmbeddingProvider& provider,
                                    const EmbedRankParams& params) {
  params.validate();
  return mmr_select(
      embed_candidates(doc, candidate_phrases(doc, params.max_ngram), provider),
      params.top_n, params.mmr_lambda);
}

std::vector<ScoredPhrase> keybert_extract(const Document& doc,
                                          const EmbeddingProvider& provider,
                                          int top_n, int max_ngram) {
  if (top_n < 1) throw ArgumentError("top_n must be >= 1");
  return cosine_top(
      embed_candidates(doc, candidate_phrases(doc, max_ngram), provider),
      top_n);
}

}  // namespace banklens::embed
