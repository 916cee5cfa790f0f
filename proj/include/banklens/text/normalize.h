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

#ifndef BANKLENS_TEXT_NORMALIZE_H_
#define BANKLENS_TEXT_NORMALIZE_H_

#include <string>
#include <string_view>

namespace banklens::text {

struct NormalizationConfig {
  bool lowercase_latin = true;
  bool strip_urls = true;
  bool strip_symbols = true;
  bool collapse_whitespace = true;
};

// Cleans comment text for the pipeline. The result is NFC. Sinhala scalars
// are never case-mapped. Throws DecodeError on malformed UTF-8.
//
// Symbol stripping keeps letters, marks, numbers, whitespace, zero-width
// joiners and currency signs. Apostrophes and hyphens survive only between
// two word characters. A run of sentence terminators collapses to its first
// character and survives only when text content lies on both sides of it.
std::string normalize_text(std::string_view text,
                           const NormalizationConfig& config = {});

}  // namespace banklens::text

#endif  // BANKLENS_TEXT_NORMALIZE_H_
