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

#ifndef BANKLENS_STAT_TFIDF_H_
#define BANKLENS_STAT_TFIDF_H_

#include <map>
#include <string>
#include <vector>

#include "banklens/core/types.h"

namespace banklens::stat {

using TermScores = std::map<std::string, double>;

// score(t, d) = tf(t, d) * ln((1 + N) / (1 + df(t))) over normalized
// unigrams that are neither stopwords nor symbols. One map per document, in
// corpus order. Throws ArgumentError on an empty corpus.
std::vector<TermScores> tfidf_scores(const std::vector<Document>& corpus);

}  // namespace banklens::stat

#endif  // BANKLENS_STAT_TFIDF_H_
