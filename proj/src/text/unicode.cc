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

#include "banklens/text/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>

#include <vector>

#include "banklens/core/error.h"
#include "banklens/core/utf8.h"

namespace banklens::text {
namespace {

std::uint32_t category_mask(char32_t c) {
  return U_GET_GC_MASK(static_cast<UChar32>(c));
}

}  // namespace

std::u32string nfc(std::u32string_view scalars) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const icu::UnicodeString input = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(scalars.data()),
      static_cast<int32_t>(scalars.size()));
  if (normalizer->isNormalized(input, status) && U_SUCCESS(status)) {
    return std::u32string(scalars);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString output = normalizer->normalize(input, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::u32string out(static_cast<std::size_t>(output.countChar32()), U'\0');
  status = U_ZERO_ERROR;
  output.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                 static_cast<int32_t>(out.size()), status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING) {
    throw Error("NFC conversion failed");
  }
  return out;
}

std::string nfc_utf8(std::string_view utf8) {
  return encode_utf8(nfc(decode_utf8(utf8)));
}

bool is_letter(char32_t c) { return category_mask(c) & U_GC_L_MASK; }
bool is_mark(char32_t c) { return category_mask(c) & U_GC_M_MASK; }
bool is_number(char32_t c) { return category_mask(c) & U_GC_N_MASK; }
bool is_decimal_digit(char32_t c) { return category_mask(c) & U_GC_ND_MASK; }
bool is_symbol(char32_t c) { return category_mask(c) & U_GC_S_MASK; }
bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool is_latin_letter(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  return is_letter(c) &&
         uscript_getScript(static_cast<UChar32>(c), &status) == USCRIPT_LATIN;
}

bool is_sinhala(char32_t c) {
  return c >= 0x0D80 && c <= 0x0DFF && !(c >= 0x0DE6 && c <= 0x0DEF);
}

bool is_sentence_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == 0x0964 || c == 0x0DF4;
}

bool is_word_connector(char32_t c) {
  return c == U'\'' || c == 0x2019 || c == U'-' || c == 0x2010;
}

std::u32string lower_latin(std::u32string_view scalars) {
  std::u32string out(scalars);
  for (char32_t& c : out) {
    if (is_latin_letter(c)) {
      c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
    }
  }
  return out;
}

std::string fold_key(std::string_view utf8) {
  return encode_utf8(nfc(lower_latin(nfc(decode_utf8(utf8)))));
}

}  // namespace banklens::text
