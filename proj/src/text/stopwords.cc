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

#include "banklens/text/stopwords.h"

#include <fstream>
#include <sstream>

#include "banklens/core/error.h"
#include "banklens/core/packaged_data.h"
#include "banklens/text/unicode.h"

namespace banklens::text {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Stoplist Stoplist::parse(std::string_view content) {
  Stoplist list;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = trim(content.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    list.terms_.insert(fold_key(line));
  }
  return list;
}

Stoplist Stoplist::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open stoplist '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

bool Stoplist::contains(std::string_view normalized) const {
  return terms_.count(std::string(normalized)) > 0;
}

const Stopwords& default_stopwords() {
  static const Stopwords* stopwords = new Stopwords{
      Stoplist::parse(packaged_data("stopwords_en.txt")),
      Stoplist::parse(packaged_data("stopwords_si.txt")),
  };
  return *stopwords;
}

bool is_stopword(std::string_view normalized, Language lang,
                 const Stopwords& stopwords) {
  switch (lang) {
    case Language::kEn: return stopwords.en.contains(normalized);
    case Language::kSi: return stopwords.si.contains(normalized);
    case Language::kMixed: break;
  }
  throw ArgumentError("stoplists exist for en and si only");
}

bool is_stopword(std::string_view normalized, std::string_view lang_tag,
                 const Stopwords& stopwords) {
  if (lang_tag != "en" && lang_tag != "si") {
    throw ArgumentError("unknown stoplist language '" + std::string(lang_tag) +
                        "'");
  }
  return is_stopword(normalized, parse_language(lang_tag), stopwords);
}

}  // namespace banklens::text
