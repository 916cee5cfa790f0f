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

#ifndef BANKLENS_LEXICON_GAZETTEER_H_
#define BANKLENS_LEXICON_GAZETTEER_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "banklens/core/types.h"
#include "banklens/lexicon/lexicon.h"

namespace banklens::lexicon {

struct EntitySpan {
  TokenRange range;
  Category category = Category::kGeneralFinance;
  std::string matched_term;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Greedy longest match, left to right, over normalized tokens. Spans stay
// inside one sentence and do not cross punctuation. The result is sorted and
// non-overlapping.
std::vector<EntitySpan> gazetteer_match(const Document& doc, const Lexicon& lex);

// Spans from an external NER run, keyed by doc id. JSON lines of
// {"doc_id": ..., "spans": [{"start", "end", "category", "term"}]}. Throws
// IoError or ParseError.
using NerSideFile = std::map<std::string, std::vector<EntitySpan>>;
NerSideFile load_ner_side_file(const std::filesystem::path& path);

// Side-file spans for `doc`, dropping those that fall outside its tokens.
std::vector<EntitySpan> side_file_spans(const NerSideFile& side,
                                        const Document& doc);

enum class QueryMode { kAnyOf, kAllOf };

// `"savings account" OR loan`. Terms containing whitespace are quoted.
// Throws ArgumentError for an empty list or an empty term.
std::string build_boolean_query(const std::vector<std::string>& keywords,
                                QueryMode mode);

}  // namespace banklens::lexicon

#endif  // BANKLENS_LEXICON_GAZETTEER_H_
