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

#include "banklens/text/tokenizer.h"

#include <utility>

#include "banklens/core/error.h"
#include "banklens/core/utf8.h"
#include "banklens/text/unicode.h"

namespace banklens::text {
namespace {

bool is_word_char(char32_t c) { return is_lmn(c) || is_joiner(c); }

bool is_numeric_separator(char32_t c) { return c == U'.' || c == U','; }

Token make_token(const std::u32string& text, std::size_t begin,
                 std::size_t end, const Stopwords& stopwords) {
  Token token;
  token.surface = encode_utf8(std::u32string_view(text).substr(begin, end - begin));
  token.normalized = fold_key(token.surface);
  token.script = detect_script(token.surface);
  token.char_offset = begin;
  token.char_length = end - begin;
  token.is_stopword = stopwords.contains(token.normalized);
  return token;
}

}  // namespace

Script detect_script(std::string_view surface) {
  if (surface.empty()) throw ArgumentError("cannot detect script of ''");
  bool sinhala = false;
  bool latin = false;
  bool all_digits = true;
  for (char32_t c : decode_utf8(surface)) {
    if (is_sinhala(c)) sinhala = true;
    if (is_latin_letter(c)) latin = true;
    if (!is_decimal_digit(c)) all_digits = false;
  }
  if (sinhala && latin) return Script::kMixed;
  if (sinhala) return Script::kSinhala;
  if (latin) return Script::kLatin;
  if (all_digits) return Script::kDigit;
  return Script::kOther;
}

std::vector<Token> tokenize(std::string_view text, const Stopwords& stopwords) {
  const std::u32string s = decode_utf8(text);
  const std::size_t n = s.size();
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = s[i];
    if (is_symbol(c)) {
      tokens.push_back(make_token(s, i, i + 1, stopwords));
      ++i;
      continue;
    }
    if (!is_word_char(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    bool content = false;
    while (i < n) {
      const char32_t d = s[i];
      if (is_word_char(d)) {
        content = content || is_lmn(d);
        ++i;
        continue;
      }
      if (i + 1 < n && i > begin) {
        const char32_t prev = s[i - 1];
        const char32_t next = s[i + 1];
        if (is_word_connector(d) && is_word_char(prev) && is_word_char(next)) {
          ++i;
          continue;
        }
        if (is_numeric_separator(d) && is_decimal_digit(prev) &&
            is_decimal_digit(next)) {
          ++i;
          continue;
        }
      }
      break;
    }
    if (content) tokens.push_back(make_token(s, begin, i, stopwords));
  }
  return tokens;
}

std::vector<TokenRange> split_sentences(const std::vector<Token>& tokens,
                                        std::string_view raw_text) {
  std::vector<TokenRange> sentences;
  if (tokens.empty()) return sentences;
  const std::u32string s = decode_utf8(raw_text);
  std::size_t begin = 0;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::size_t gap_begin =
        tokens[i - 1].char_offset + tokens[i - 1].char_length;
    const std::size_t gap_end = tokens[i].char_offset;
    bool boundary = false;
    for (std::size_t k = gap_begin; k < gap_end && k < s.size(); ++k) {
      if (is_sentence_terminator(s[k]) || s[k] == U'\n') {
        boundary = true;
        break;
      }
    }
    if (boundary) {
      sentences.push_back({begin, i});
      begin = i;
    }
  }
  sentences.push_back({begin, tokens.size()});
  return sentences;
}

bool is_symbol_token(const Token& token) {
  const std::u32string scalars = decode_utf8(token.surface);
  return scalars.size() == 1 && is_symbol(scalars[0]);
}

std::vector<bool> punctuation_breaks(const Document& doc) {
  const auto& tokens = doc.tokens();
  std::vector<bool> breaks(tokens.size(), false);
  const std::u32string s = decode_utf8(doc.raw_text());
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const std::size_t gap_end = tokens[i].char_offset;
    for (std::size_t k = tokens[i - 1].char_offset + tokens[i - 1].char_length;
         k < gap_end; ++k) {
      if (!is_whitespace(s[k])) {
        breaks[i] = true;
        break;
      }
    }
  }
  return breaks;
}

Document build_document(std::string source_id, std::string_view text,
                        const NormalizationConfig& config,
                        const Stopwords& stopwords) {
  std::string normalized = normalize_text(text, config);
  std::vector<Token> tokens = tokenize(normalized, stopwords);
  std::vector<TokenRange> sentences = split_sentences(tokens, normalized);
  return Document(std::move(source_id), std::move(normalized),
                  std::move(tokens), std::move(sentences));
}

}  // namespace banklens::text
