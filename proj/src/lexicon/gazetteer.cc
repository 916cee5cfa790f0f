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

#include "banklens/lexicon/gazetteer.h"

#include <algorithm>
#include <fstream>
#include <string>

#include "json.hpp"

#include "banklens/core/error.h"
#include "banklens/text/tokenizer.h"

namespace banklens::lexicon {

std::vector<EntitySpan> gazetteer_match(const Document& doc, const Lexicon& lex) {
  std::vector<EntitySpan> spans;
  if (lex.empty()) return spans;
  const auto& tokens = doc.tokens();
  const std::vector<bool> breaks = text::punctuation_breaks(doc);
  for (const TokenRange& sentence : doc.sentences()) {
    std::size_t i = sentence.begin;
    while (i < sentence.end) {
      // longest run from i that crosses no punctuation
      std::size_t limit = i + 1;
      while (limit < sentence.end && limit - i < lex.max_term_tokens() &&
             !breaks[limit]) {
        ++limit;
      }
      std::size_t matched = 0;
      for (std::size_t end = limit; end > i; --end) {
        std::string key = tokens[i].normalized;
        for (std::size_t k = i + 1; k < end; ++k) key += ' ' + tokens[k].normalized;
        if (const LexiconEntry* e = lex.find(key)) {
          spans.push_back({{i, end}, e->category, e->term});
          matched = end - i;
          break;
        }
      }
      i += std::max<std::size_t>(matched, 1);
    }
  }
  return spans;
}

NerSideFile load_ner_side_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  NerSideFile out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto row = nlohmann::json::parse(line);
      auto& spans = out[row.at("doc_id").get<std::string>()];
      for (const auto& s : row.at("spans")) {
        EntitySpan span;
        span.range = {s.at("start").get<std::size_t>(), s.at("end").get<std::size_t>()};
        const auto category = try_parse_category(s.at("category").get<std::string>());
        if (!category) throw ParseError("unknown category", line_no);
        span.category = *category;
        span.matched_term = normalize_term(s.at("term").get<std::string>());
        if (span.range.empty() || span.matched_term.empty()) {
          throw ParseError("empty span", line_no);
        }
        spans.push_back(std::move(span));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  for (auto& [id, spans] : out) {
    std::sort(spans.begin(), spans.end(), [](const EntitySpan& a, const EntitySpan& b) {
      return a.range.begin < b.range.begin;
    });
  }
  return out;
}

std::vector<EntitySpan> side_file_spans(const NerSideFile& side,
                                        const Document& doc) {
  std::vector<EntitySpan> out;
  auto it = side.find(doc.source_id());
  if (it == side.end()) return out;
  for (const EntitySpan& s : it->second) {
    if (s.range.end <= doc.tokens().size()) out.push_back(s);
  }
  return out;
}

std::string build_boolean_query(const std::vector<std::string>& keywords,
                                QueryMode mode) {
  if (keywords.empty()) throw ArgumentError("boolean query needs a keyword");
  std::string out;
  for (const std::string& k : keywords) {
    if (k.find_first_not_of(" \t\n") == std::string::npos) {
      throw ArgumentError("boolean query keyword is empty");
    }
    if (!out.empty()) out += mode == QueryMode::kAnyOf ? " OR " : " AND ";
    if (k.find_first_of(" \t\n") == std::string::npos) {
      out += k;
      continue;
    }
    out += '"';
    for (char c : k) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
  }
  return out;
}

}  // namespace banklens::lexicon
