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

#ifndef BANKLENS_STAT_RAKE_H_
#define BANKLENS_STAT_RAKE_H_

#include <vector>

#include "banklens/core/scored_phrase.h"
#include "banklens/core/types.h"

namespace banklens::stat {

// Candidates are maximal stopword-free token runs, also broken at sentence
// ends, punctuation and symbol tokens. A word scores degree / frequency over
// the candidate co-occurrence graph; a phrase sums its word scores. Distinct
// phrases, best first; ties keep document order.
std::vector<ScoredPhrase> rake_extract(const Document& doc);

}  // namespace banklens::stat

#endif  // BANKLENS_STAT_RAKE_H_
