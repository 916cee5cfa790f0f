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

#include "banklens/stat/tfidf.h"

#include <cmath>
#include <set>

#include "banklens/core/error.h"
#include "banklens/text/tokenizer.h"

namespace banklens::stat {
namespace {

bool counts_as_term(const Token& token) {
  return !token.is_stopword && !text::is_symbol_token(token);
}

}  // namespace

std::vector<TermScores> tfidf_scores(const std::vector<Document>& corpus) {
  if (corpus.empty()) throw ArgumentError("TF-IDF needs a non-empty corpus");

  std::vector<std::map<std::string, int>> counts(corpus.size());
  std::map<std::string, int> df;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const Token& token : corpus[d].tokens()) {
      if (counts_as_term(token)) ++counts[d][token.normalized];
    }
    for (const auto& [term, tf] : counts[d]) ++df[term];
  }

  const double n = static_cast<double>(corpus.size());
  std::vector<TermScores> scores(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    for (const auto& [term, tf] : counts[d]) {
      const double idf = std::log((1.0 + n) / (1.0 + df[term]));
      scores[d][term] = tf * idf;
    }
  }
  return scores;
}

}  // namespace banklens::stat
