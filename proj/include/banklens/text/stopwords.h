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

#ifndef BANKLENS_TEXT_STOPWORDS_H_
#define BANKLENS_TEXT_STOPWORDS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

#include "banklens/core/types.h"

namespace banklens::text {

// A set of folded terms read from a one-term-per-line file. '#' starts a
// comment line; blank lines are skipped.
class Stoplist {
 public:
  Stoplist() = default;

  static Stoplist parse(std::string_view content);
  // Throws IoError when the file cannot be read.
  static Stoplist load(const std::string& path);

  bool contains(std::string_view normalized) const;
  std::size_t size() const { return terms_.size(); }

 private:
  std::unordered_set<std::string> terms_;
};

struct Stopwords {
  Stoplist en;
  Stoplist si;

  bool contains(std::string_view normalized) const {
    return en.contains(normalized) || si.contains(normalized);
  }
};

// The packaged English and Sinhala stoplists, parsed once.
const Stopwords& default_stopwords();

// Throws ArgumentError unless `lang` is en or si.
bool is_stopword(std::string_view normalized, Language lang,
                 const Stopwords& stopwords = default_stopwords());
bool is_stopword(std::string_view normalized, std::string_view lang_tag,
                 const Stopwords& stopwords = default_stopwords());

}  // namespace banklens::text

#endif  // BANKLENS_TEXT_STOPWORDS_H_
