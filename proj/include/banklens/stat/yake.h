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

#ifndef BANKLENS_STAT_YAKE_H_
#define BANKLENS_STAT_YAKE_H_

#include <string_view>
#include <vector>

#include "banklens/core/scored_phrase.h"
#include "banklens/core/types.h"
#include "banklens/text/stopwords.h"

namespace banklens::stat {

struct YakeParams {
  int max_ngram = 3;
  int window = 2;
  int top_n = 20;
  // Candidates whose Levenshtein similarity to an already selected one
  // exceeds this are dropped.
  double dedup_threshold = 0.9;

  // Throws ArgumentError when a field is out of range.
  void validate() const;
};

// YAKE (Campos et al.). Term features: casing, position, normalized
// frequency, left/right relatedness within `window`, sentence spread. Lower
// scores are better; the result is ascending and holds at most top_n items.
std::vector<ScoredPhrase> yake_extract(
    const Document& doc, const YakeParams& params = {},
    const text::Stopwords& stopwords = text::default_stopwords());

// 1 - distance / max(len) over Unicode scalars; 1.0 for two empty strings.
double levenshtein_similarity(std::u32string_view a, std::u32string_view b);

}  // namespace banklens::stat

#endif  // BANKLENS_STAT_YAKE_H_
