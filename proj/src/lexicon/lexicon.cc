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

#include "banklens/lexicon/lexicon.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "banklens/core/error.h"
#include "banklens/core/packaged_data.h"
#include "banklens/text/normalize.h"
#include "banklens/text/tokenizer.h"

namespace banklens::lexicon {
namespace {

constexpr std::array<std::string_view, 6> kCategoryNames = {
    "BankName",       "LoanType",      "AccountType",
    "RegulatoryTerm", "GeneralFinance", "AspectKeyword",
};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t tab = line.find('\t', begin);
    out.push_back(line.substr(begin, tab - begin));
    if (tab == std::string_view::npos) break;
    begin = tab + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::size_t count_tokens(const std::string& term) {
  return static_cast<std::size_t>(std::count(term.begin(), term.end(), ' ')) + 1;
}

}  // namespace

std::string_view to_string(Category category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<Category> try_parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::string normalize_term(std::string_view raw) {
  std::string out;
  for (const Token& t : text::tokenize(text::normalize_text(raw))) {
    if (!out.empty()) out += ' ';
    out += t.normalized;
  }
  return out;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) {
  for (LexiconEntry& e : entries) {
    e.term = normalize_term(e.term);
    if (e.term.empty()) throw ValidationError("lexicon term is empty");
    if ((e.category == Category::kAspectKeyword) != e.aspect.has_value()) {
      throw ValidationError("'" + e.term +
                            "': aspect is required for AspectKeyword and only there");
    }
    e.token_count = count_tokens(e.term);
    auto it = index_.find(e.term);
    if (it != index_.end()) {
      LexiconEntry& kept = entries_[it->second];
      if (kept.category != e.category || kept.aspect != e.aspect) {
        throw IntegrityError("'" + e.term + "' listed as both " +
                             std::string(to_string(kept.category)) + " and " +
                             std::string(to_string(e.category)));
      }
      if (kept.language != e.language) kept.language = Language::kMixed;
      continue;
    }
    max_term_tokens_ = std::max(max_term_tokens_, e.token_count);
    index_.emplace(e.term, entries_.size());
    entries_.push_back(std::move(e));
  }
}

Lexicon Lexicon::parse(std::string_view tsv) {
  std::vector<LexiconEntry> entries;
  std::map<std::string, std::vector<std::pair<std::size_t, std::string>>> rows;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < tsv.size()) {
    std::size_t end = tsv.find('\n', begin);
    if (end == std::string_view::npos) end = tsv.size();
    const std::string_view line = tsv.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields.size() > 4) {
      throw ParseError("expected 3 or 4 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    LexiconEntry entry;
    entry.term = normalize_term(trim(fields[0]));
    if (entry.term.empty()) throw ParseError("empty term", line_no);
    const auto category = try_parse_category(trim(fields[1]));
    if (!category) {
      throw ParseError("unknown category '" + std::string(trim(fields[1])) + "'",
                       line_no);
    }
    entry.category = *category;
    try {
      entry.language = parse_language(trim(fields[2]));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (fields.size() == 4 && !trim(fields[3]).empty()) {
      entry.aspect = try_parse_aspect(trim(fields[3]));
      if (!entry.aspect) {
        throw ParseError("unknown aspect '" + std::string(trim(fields[3])) + "'",
                         line_no);
      }
    }
    if ((entry.category == Category::kAspectKeyword) != entry.aspect.has_value()) {
      throw ParseError(entry.category == Category::kAspectKeyword
                           ? "AspectKeyword row needs an aspect column"
                           : "aspect column is only allowed on AspectKeyword rows",
                       line_no);
    }
    const std::string signature =
        std::string(to_string(entry.category)) + "/" +
        (entry.aspect ? std::string(to_string(*entry.aspect)) : "");
    auto& seen = rows[entry.term];
    for (const auto& [other_line, other_signature] : seen) {
      if (other_signature != signature) {
        throw IntegrityError("conflicting rows for '" + entry.term + "' at lines " +
                             std::to_string(other_line) + " and " +
                             std::to_string(line_no));
      }
    }
    seen.emplace_back(line_no, signature);
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Lexicon Lexicon::packaged(std::string_view name) {
  return parse(packaged_data(name));
}

std::string Lexicon::serialize() const {
  std::vector<const LexiconEntry*> sorted;
  for (const LexiconEntry& e : entries_) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) { return a->term < b->term; });
  std::string out;
  for (const LexiconEntry* e : sorted) {
    out += e->term;
    out += '\t';
    out += to_string(e->category);
    out += '\t';
    out += to_string(e->language);
    if (e->aspect) {
      out += '\t';
      out += to_string(*e->aspect);
    }
    out += '\n';
  }
  return out;
}

const LexiconEntry* Lexicon::find(std::string_view normalized_term) const {
  auto it = index_.find(normalized_term);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const LexiconEntry*> Lexicon::select(Category category,
                                                 Language language) const {
  std::vector<const LexiconEntry*> out;
  for (const LexiconEntry& e : entries_) {
    if (e.category == category && language_matches(e.language, language)) {
      out.push_back(&e);
    }
  }
  return out;
}

bool language_matches(Language entry, std::optional<Language> filter) {
  if (!filter || *filter == Language::kMixed || entry == Language::kMixed) {
    return true;
  }
  return entry == *filter;
}

bool vocab_contains(std::string_view normalized_term, const Lexicon& lex,
                    std::optional<Language> filter) {
  const LexiconEntry* e = lex.find(normalized_term);
  return e != nullptr && language_matches(e->language, filter);
}

const Lexicon& default_vocabulary() {
  static const Lexicon lex = [] {
    std::vector<LexiconEntry> entries = Lexicon::packaged("lexicon_en.tsv").entries();
    const Lexicon si = Lexicon::packaged("lexicon_si.tsv");
    entries.insert(entries.end(), si.entries().begin(), si.entries().end());
    return Lexicon(std::move(entries));
  }();
  return lex;
}

const Lexicon& default_aspect_keywords() {
  static const Lexicon lex = Lexicon::packaged("aspect_keywords.tsv");
  return lex;
}

}  // namespace banklens::lexicon
