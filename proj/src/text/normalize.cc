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

#include "banklens/text/normalize.h"

#include <unicode/uchar.h>

#include <array>
#include <vector>

#include "banklens/core/utf8.h"
#include "banklens/text/unicode.h"

namespace banklens::text {
namespace {

bool is_currency(char32_t c) {
  return u_charType(static_cast<UChar32>(c)) == U_CURRENCY_SYMBOL;
}

char32_t ascii_lower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

bool starts_with_ci(const std::u32string& s, std::size_t pos,
                    std::u32string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (ascii_lower(s[pos + i]) != prefix[i]) return false;
  }
  return true;
}

std::u32string strip_urls(const std::u32string& s) {
  static constexpr std::array<std::u32string_view, 3> kPrefixes = {
      U"http://", U"https://", U"www."};
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    bool url = false;
    if (i == 0 || !is_lmn(s[i - 1])) {
      for (auto prefix : kPrefixes) {
        if (starts_with_ci(s, i, prefix)) {
          url = true;
          break;
        }
      }
    }
    if (!url) {
      out.push_back(s[i++]);
      continue;
    }
    while (i < s.size() && !is_whitespace(s[i])) ++i;
    out.push_back(U' ');
  }
  return out;
}

std::u32string strip_symbols(const std::u32string& s) {
  const std::size_t n = s.size();
  // content_before[i]: some L/M/N scalar occurs in s[0, i).
  std::vector<bool> content_before(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    content_before[i + 1] = content_before[i] || is_lmn(s[i]);
  }
  std::vector<bool> content_after(n + 1, false);
  for (std::size_t i = n; i-- > 0;) {
    content_after[i] = content_after[i + 1] || is_lmn(s[i]);
  }

  std::u32string out;
  out.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = s[i];
    if (is_lmn(c) || is_whitespace(c) || is_joiner(c) || is_currency(c)) {
      out.push_back(c);
      ++i;
    } else if (is_word_connector(c)) {
      const bool joined = i > 0 && i + 1 < n && is_lmn(s[i - 1]) &&
                          is_lmn(s[i + 1]);
      out.push_back(joined ? c : U' ');
      ++i;
    } else if (is_sentence_terminator(c)) {
      std::size_t end = i;
      while (end < n && is_sentence_terminator(s[end])) ++end;
      const bool inner = content_before[i] && content_after[end];
      out.push_back(inner ? c : U' ');
      i = end;
    } else {
      out.push_back(U' ');
      ++i;
    }
  }
  return out;
}

std::u32string collapse_whitespace(const std::u32string& s) {
  std::u32string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char32_t c : s) {
    if (is_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string normalize_text(std::string_view text,
                           const NormalizationConfig& config) {
  std::u32string s = nfc(decode_utf8(text));
  if (config.lowercase_latin) s = nfc(lower_latin(s));
  if (config.strip_urls) s = strip_urls(s);
  if (config.strip_symbols) s = strip_symbols(s);
  if (config.collapse_whitespace) s = collapse_whitespace(s);
  return encode_utf8(nfc(s));
}

}  // namespace banklens::text
