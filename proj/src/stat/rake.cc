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

#include "banklens/stat/rake.h"

#include <algorithm>
#include <map>
#include <string>

#include "banklens/text/tokenizer.h"

namespace banklens::stat {

std::vector<ScoredPhrase> rake_extract(const Document& doc) {
  const auto& tokens = doc.tokens();
  const std::vector<bool> breaks = text::punctuation_breaks(doc);

  std::vector<TokenRange> runs;
  for (const TokenRange& sentence : doc.sentences()) {
    std::size_t begin = sentence.begin;
    for (std::size_t i = sentence.begin; i <= sentence.end; ++i) {
      const bool cut = i == sentence.end || tokens[i].is_stopword ||
                       text::is_symbol_token(tokens[i]) ||
                       (i > sentence.begin && breaks[i]);
      if (!cut) continue;
      if (i > begin) runs.push_back({begin, i});
      begin = (i < sentence.end && (tokens[i].is_stopword ||
                                    text::is_symbol_token(tokens[i])))
                  ? i + 1
                  : i;
    }
  }

  std::map<std::string, double> degree;
  std::map<std::string, double> frequency;
  for (const TokenRange& run : runs) {
    for (std::size_t i = run.begin; i < run.end; ++i) {
      degree[tokens[i].normalized] += static_cast<double>(run.size());
      frequency[tokens[i].normalized] += 1.0;
    }
  }

  std::vector<ScoredPhrase> out;
  std::map<std::string, bool> seen;
  for (const TokenRange& run : runs) {
    CandidatePhrase phrase = CandidatePhrase::from_document(doc, run);
    if (seen[phrase.normalized]) continue;
    seen[phrase.normalized] = true;
    double score = 0.0;
    for (std::size_t i = run.begin; i < run.end; ++i) {
      score += degree[tokens[i].normalized] / frequency[tokens[i].normalized];
    }
    out.push_back({std::move(phrase), score, Polarity::kHigherIsBetter});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredPhrase& a, const ScoredPhrase& b) {
                     return a.score > b.score;
                   });
  return out;
}

}  // namespace banklens::stat
