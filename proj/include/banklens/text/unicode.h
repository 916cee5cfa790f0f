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

#ifndef BANKLENS_TEXT_UNICODE_H_
#define BANKLENS_TEXT_UNICODE_H_

#include <string>
#include <string_view>

namespace banklens::text {

inline constexpr char32_t kZeroWidthNonJoiner = 0x200C;
inline constexpr char32_t kZeroWidthJoiner = 0x200D;

// Canonical composition (NFC).
std::u32string nfc(std::u32string_view scalars);
std::string nfc_utf8(std::string_view utf8);

// General category classes.
bool is_letter(char32_t c);
bool is_mark(char32_t c);
bool is_number(char32_t c);
bool is_decimal_digit(char32_t c);
bool is_symbol(char32_t c);
bool is_whitespace(char32_t c);
inline bool is_lmn(char32_t c) {
  return is_letter(c) || is_mark(c) || is_number(c);
}
inline bool is_joiner(char32_t c) {
  return c == kZeroWidthJoiner || c == kZeroWidthNonJoiner;
}

bool is_latin_letter(char32_t c);
// Sinhala block, excluding the Sinhala Lith digits.
bool is_sinhala(char32_t c);
bool is_sentence_terminator(char32_t c);
// Apostrophes and hyphens that may join two word characters.
bool is_word_connector(char32_t c);

// Lowercases Latin-script letters only; every other scalar passes through.
std::u32string lower_latin(std::u32string_view scalars);

// NFC followed by Latin lowercasing: the matching key for tokens, lexicon
// terms and stoplists.
std::string fold_key(std::string_view utf8);

}  // namespace banklens::text

#endif  // BANKLENS_TEXT_UNICODE_H_
