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

#ifndef BANKLENS_LEXICON_LEXICON_H_
#define BANKLENS_LEXICON_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "banklens/core/types.h"

namespace banklens::lexicon {

enum class Category {
  kBankName,
  kLoanType,
  kAccountType,
  kRegulatoryTerm,
  kGeneralFinance,
  kAspectKeyword,
};

// "BankName", "LoanType", ...
std::string_view to_string(Category category);
std::optional<Category> try_parse_category(std::string_view name);

struct LexiconEntry {
  std::string term;  // normalized tokens joined by single spaces
  Category category = Category::kGeneralFinance;
  Language language = Language::kEn;
  std::optional<AspectLabel> aspect;
  std::size_t token_count = 0;
};

// Normalizes a raw term the way documents are normalized, so that a term
// matches Document::normalized_text over its tokens. May return "".
std::string normalize_term(std::string_view raw);

class Lexicon {
 public:
  Lexicon() = default;
  // Terms are normalized here. Rows repeating a term with the same category
  // and aspect merge (differing languages become mixed); any other repeat
  // throws IntegrityError. Throws ValidationError for an empty term or an
  // aspect that is present without AspectKeyword or missing with it.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  // TSV rows: term, category, language[, aspect]. Blank lines and lines
  // starting with '#' are skipped. Throws ParseError (with the line) or
  // IntegrityError (listing the clashing lines).
  static Lexicon parse(std::string_view tsv);
  static Lexicon load(const std::filesystem::path& path);
  // One of the lexicons compiled into the library, by file name.
  static Lexicon packaged(std::string_view name);

  // Canonical TSV: entries sorted by term.
  std::string serialize() const;

  const LexiconEntry* find(std::string_view normalized_term) const;
  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::vector<const LexiconEntry*> select(Category category,
                                          Language language) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_term_tokens() const { return max_term_tokens_; }

 private:
  static Lexicon parse_rows(std::string_view tsv);

  std::vector<LexiconEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::size_t max_term_tokens_ = 0;
};

// Which entries a membership test may use. kMixed entries pass every filter;
// a nullopt filter passes everything.
bool language_matches(Language entry, std::optional<Language> filter);

bool vocab_contains(std::string_view normalized_term, const Lexicon& lex,
                    std::optional<Language> filter = std::nullopt);

// Default lexicons: English and Sinhala vocabularies, and aspect keywords.
const Lexicon& default_vocabulary();
const Lexicon& default_aspect_keywords();

}  // namespace banklens::lexicon

#endif  // BANKLENS_LEXICON_LEXICON_H_
