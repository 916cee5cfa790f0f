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

#ifndef BANKLENS_CORE_TYPES_H_
#define BANKLENS_CORE_TYPES_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace banklens {

enum class Script { kSinhala, kLatin, kDigit, kOther, kMixed };

enum class Language { kEn, kSi, kMixed };

std::string_view to_string(Script script);
std::string_view to_string(Language language);

// Accepts "en", "si" and "mixed". Throws ArgumentError otherwise.
Language parse_language(std::string_view tag);

// Half-open range of token indices.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  bool overlaps(const TokenRange& other) const {
    return begin < other.end && other.begin < end;
  }
  bool contains(std::size_t index) const {
    return index >= begin && index < end;
  }

  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

// One user-generated text item with source metadata.
class Comment {
 public:
  // Throws ValidationError when `id` is empty. Text emptiness is checked at
  // ingestion exit, not here, so sources can report empty comments.
  Comment(std::string id, std::string source, std::string text,
          std::optional<std::string> timestamp = std::nullopt,
          std::optional<Language> lang_hint = std::nullopt);

  const std::string& id() const { return id_; }
  const std::string& source() const { return source_; }
  const std::string& text() const { return text_; }
  const std::optional<std::string>& timestamp() const { return timestamp_; }
  const std::optional<Language>& lang_hint() const { return lang_hint_; }

  // Same metadata, different text.
  Comment with_text(std::string text) const;

  friend bool operator==(const Comment&, const Comment&) = default;

 private:
  std::string id_;
  std::string source_;
  std::string text_;
  std::optional<std::string> timestamp_;
  std::optional<Language> lang_hint_;
};

struct Token {
  std::string surface;
  // NFC, Latin lowercased. Lexicon and stoplist matching key.
  std::string normalized;
  Script script = Script::kOther;
  // Offsets and lengths count Unicode scalar values, not bytes.
  std::size_t char_offset = 0;
  std::size_t char_length = 0;
  bool is_stopword = false;

  bool is_letter_token() const {
    return script == Script::kLatin || script == Script::kSinhala ||
           script == Script::kMixed;
  }
};

// Normalized, tokenized, sentence-split text. Immutable once built.
class Document {
 public:
  // Throws ValidationError if sentence ranges do not partition the tokens in
  // order or a token lies outside `raw_text`.
  Document(std::string source_id, std::string raw_text,
           std::vector<Token> tokens, std::vector<TokenRange> sentences);

  const std::string& source_id() const { return source_id_; }
  const std::string& raw_text() const { return raw_text_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<TokenRange>& sentences() const { return sentences_; }
  std::size_t raw_length() const { return raw_length_; }

  // Index of the sentence containing token `index`.
  std::size_t sentence_of(std::size_t index) const;

  // Normalized token forms in `range` joined by single spaces.
  std::string normalized_text(TokenRange range) const;
  std::string surface_text(TokenRange range) const;

 private:
  std::string source_id_;
  std::string raw_text_;
  std::size_t raw_length_ = 0;
  std::vector<Token> tokens_;
  std::vector<TokenRange> sentences_;
};

// A contiguous token n-gram eligible for keyword scoring.
struct CandidatePhrase {
  TokenRange range;
  std::string surface;
  std::string normalized;

  // Builds the phrase for `range`. Throws ValidationError when the range is
  // empty, out of bounds, or begins/ends on a stopword.
  static CandidatePhrase from_document(const Document& doc, TokenRange range);
};

enum class Method { kYake, kKeyBert, kEmbedRank, kTfidf, kRake };

std::string_view to_string(Method method);

struct MethodScore {
  double raw = 0.0;
  double normalized = 0.0;
};

// A scored keyword after fusion, validation and boosting.
class KeywordResult {
 public:
  // final_score is derived: fused_score * boost_factor when boosted, else
  // fused_score. Throws ValidationError on a negative or non-finite fused
  // score, a normalized method score outside [0, 1], boost_factor <= 0, or
  // boosted without vocab_matched.
  KeywordResult(CandidatePhrase phrase,
                std::map<Method, MethodScore> method_scores,
                double fused_score, bool ner_validated, bool vocab_matched,
                bool boosted, double boost_factor = 2.0);

  const CandidatePhrase& phrase() const { return phrase_; }
  const std::map<Method, MethodScore>& method_scores() const {
    return method_scores_;
  }
  double fused_score() const { return fused_score_; }
  double final_score() const { return final_score_; }
  bool ner_validated() const { return ner_validated_; }
  bool vocab_matched() const { return vocab_matched_; }
  bool boosted() const { return boosted_; }

 private:
  CandidatePhrase phrase_;
  std::map<Method, MethodScore> method_scores_;
  double fused_score_;
  double final_score_;
  bool ner_validated_;
  bool vocab_matched_;
  bool boosted_;
};

enum class AspectLabel {
  kCustomerSupport,
  kTransactions,
  kPaymentsAndAccounts,
  kLoansAndCreditServices,
  kDigitalBanking,
  kTrustAndSecurity,
};

inline constexpr std::array<AspectLabel, 6> kAllAspects = {
    AspectLabel::kCustomerSupport,       AspectLabel::kTransactions,
    AspectLabel::kPaymentsAndAccounts,   AspectLabel::kLoansAndCreditServices,
    AspectLabel::kDigitalBanking,        AspectLabel::kTrustAndSecurity,
};

// Canonical display names, e.g. "Payments & Accounts".
std::string_view to_string(AspectLabel label);
// Exact match on the canonical names. Throws ArgumentError otherwise.
AspectLabel parse_aspect(std::string_view name);
std::optional<AspectLabel> try_parse_aspect(std::string_view name);

enum class RelevanceLabel { kRelevant, kIrrelevant };

// "relevant" / "irrelevant".
std::string_view to_string(RelevanceLabel label);
RelevanceLabel parse_relevance(std::string_view name);
std::optional<RelevanceLabel> try_parse_relevance(std::string_view name);

class EmbeddingVector {
 public:
  // Throws ValidationError when empty or any value is non-finite.
  explicit EmbeddingVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t dims() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const EmbeddingVector&,
                         const EmbeddingVector&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace banklens

#endif  // BANKLENS_CORE_TYPES_H_
