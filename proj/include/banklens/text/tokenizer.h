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

#ifndef BANKLENS_TEXT_TOKENIZER_H_
#define BANKLENS_TEXT_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "banklens/core/types.h"
#include "banklens/text/normalize.h"
#include "banklens/text/stopwords.h"

namespace banklens::text {

// Sinhala when the surface holds Sinhala scalars and no Latin letters, Latin
// for the converse, Mixed when both occur, Digit when every scalar is a
// decimal digit, Other otherwise. Throws ArgumentError on an empty surface.
Script detect_script(std::string_view surface);

// Splits on whitespace and punctuation. Apostrophes and hyphens stay inside a
// word when flanked by word characters, as do '.' and ',' between digits.
// Zero-width joiners are word characters. Each symbol becomes a token of its
// own. Fragments without letters, numbers or symbols are dropped.
std::vector<Token> tokenize(std::string_view text,
                            const Stopwords& stopwords = default_stopwords());

// Breaks after any gap between tokens that contains '.', '!', '?', '।', '෴'
// or a newline. The ranges partition `tokens`.
std::vector<TokenRange> split_sentences(const std::vector<Token>& tokens,
                                        std::string_view raw_text);

// True for the one-scalar tokens produced from symbols.
bool is_symbol_token(const Token& token);

// breaks[i] is true when the text between tokens i-1 and i holds anything
// other than whitespace. breaks[0] is false.
std::vector<bool> punctuation_breaks(const Document& doc);

// Normalizes `text`, tokenizes and splits the result.
Document build_document(std::string source_id, std::string_view text,
                        const NormalizationConfig& config = {},
                        const Stopwords& stopwords = default_stopwords());

}  // namespace banklens::text

#endif  // BANKLENS_TEXT_TOKENIZER_H_
