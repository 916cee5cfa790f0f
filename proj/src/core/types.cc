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

#include "banklens/core/types.h"

#include <cmath>
#include <utility>

#include "banklens/core/error.h"
#include "banklens/core/scored_phrase.h"
#include "banklens/core/utf8.h"

namespace banklens {

std::string_view to_string(Script script) {
  switch (script) {
    case Script::kSinhala: return "Sinhala";
    case Script::kLatin: return "Latin";
    case Script::kDigit: return "Digit";
    case Script::kOther: return "Other";
    case Script::kMixed: return "Mixed";
  }
  return "Other";
}

std::string_view to_string(Language language) {
  switch (language) {
    case Language::kEn: return "en";
    case Language::kSi: return "si";
    case Language::kMixed: return "mixed";
  }
  return "mixed";
}

Language parse_language(std::string_view tag) {
  if (tag == "en") return Language::kEn;
  if (tag == "si") return Language::kSi;
  if (tag == "mixed") return Language::kMixed;
  throw ArgumentError("unknown language tag '" + std::string(tag) + "'");
}

Comment::Comment(std::string id, std::string source, std::string text,
                 std::optional<std::string> timestamp,
                 std::optional<Language> lang_hint)
    : id_(std::move(id)),
      source_(std::move(source)),
      text_(std::move(text)),
      timestamp_(std::move(timestamp)),
      lang_hint_(lang_hint) {
  if (id_.empty()) throw ValidationError("comment id must be non-empty");
}

Comment Comment::with_text(std::string text) const {
  Comment copy = *this;
  copy.text_ = std::move(text);
  return copy;
}

Document::Document(std::string source_id, std::string raw_text,
                   std::vector<Token> tokens, std::vector<TokenRange> sentences)
    : source_id_(std::move(source_id)),
      raw_text_(std::move(raw_text)),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)) {
  raw_length_ = utf8_length(raw_text_);
  for (const Token& t : tokens_) {
    if (t.char_offset + t.char_length > raw_length_) {
      throw ValidationError("token '" + t.surface +
                            "' lies outside the document text");
    }
  }
  std::size_t expected = 0;
  for (const TokenRange& s : sentences_) {
    if (s.begin != expected || s.end <= s.begin) {
      throw ValidationError("sentence ranges must partition tokens in order");
    }
    expected = s.end;
  }
  if (expected != tokens_.size()) {
    throw ValidationError("sentence ranges do not cover every token");
  }
}

std::size_t Document::sentence_of(std::size_t index) const {
  // Sentences are sorted; binary search on begin.
  std::size_t lo = 0;
  std::size_t hi = sentences_.size();
  while (lo + 1 < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (sentences_[mid].begin <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::string Document::normalized_text(TokenRange range) const {
  std::string out;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (i > range.begin) out.push_back(' ');
    out += tokens_[i].normalized;
  }
  return out;
}

std::string Document::surface_text(TokenRange range) const {
  std::string out;
  for (std::size_t i = range.begin; i < range.end; ++i) {
    if (i > range.begin) out.push_back(' ');
    out += tokens_[i].surface;
  }
  return out;
}

CandidatePhrase CandidatePhrase::from_document(const Document& doc,
                                               TokenRange range) {
  const auto& tokens = doc.tokens();
  if (range.empty() || range.end > tokens.size()) {
    throw ValidationError("candidate range is empty or out of bounds");
  }
  if (tokens[range.begin].is_stopword || tokens[range.end - 1].is_stopword) {
    throw ValidationError("candidate phrase may not begin or end on a stopword");
  }
  return CandidatePhrase{range, doc.surface_text(range),
                         doc.normalized_text(range)};
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kYake: return "yake";
    case Method::kKeyBert: return "keybert";
    case Method::kEmbedRank: return "embedrank";
    case Method::kTfidf: return "tfidf";
    case Method::kRake: return "rake";
  }
  return "unknown";
}

KeywordResult::KeywordResult(CandidatePhrase phrase,
                             std::map<Method, MethodScore> method_scores,
                             double fused_score, bool ner_validated,
                             bool vocab_matched, bool boosted,
                             double boost_factor)
    : phrase_(std::move(phrase)),
      method_scores_(std::move(method_scores)),
      fused_score_(fused_score),
      final_score_(boosted ? fused_score * boost_factor : fused_score),
      ner_validated_(ner_validated),
      vocab_matched_(vocab_matched),
      boosted_(boosted) {
  if (!std::isfinite(fused_score) || fused_score < 0.0) {
    throw ValidationError("fused score must be finite and non-negative");
  }
  if (!(boost_factor > 0.0) || !std::isfinite(boost_factor)) {
    throw ValidationError("boost factor must be positive");
  }
  if (boosted && !vocab_matched) {
    throw ValidationError("only vocabulary-matched keywords can be boosted");
  }
  for (const auto& [method, score] : method_scores_) {
    if (!std::isfinite(score.raw) || !(score.normalized >= 0.0) ||
        !(score.normalized <= 1.0)) {
      throw ValidationError("method score for " +
                            std::string(to_string(method)) +
                            " is not normalized to [0, 1]");
    }
  }
}

namespace {

constexpr std::array<std::string_view, 6> kAspectNames = {
    "Customer Support",        "Transactions",    "Payments & Accounts",
    "Loans & Credit Services", "Digital Banking", "Trust & Security",
};

}  // namespace

std::string_view to_string(AspectLabel label) {
  return kAspectNames[static_cast<std::size_t>(label)];
}

std::optional<AspectLabel> try_parse_aspect(std::string_view name) {
  for (std::size_t i = 0; i < kAspectNames.size(); ++i) {
    if (kAspectNames[i] == name) return kAllAspects[i];
  }
  return std::nullopt;
}

AspectLabel parse_aspect(std::string_view name) {
  if (auto label = try_parse_aspect(name)) return *label;
  throw ArgumentError("'" + std::string(name) + "' is not a banking aspect");
}

std::string_view to_string(RelevanceLabel label) {
  return label == RelevanceLabel::kRelevant ? "relevant" : "irrelevant";
}

std::optional<RelevanceLabel> try_parse_relevance(std::string_view name) {
  if (name == "relevant") return RelevanceLabel::kRelevant;
  if (name == "irrelevant") return RelevanceLabel::kIrrelevant;
  return std::nullopt;
}

RelevanceLabel parse_relevance(std::string_view name) {
  if (auto label = try_parse_relevance(name)) return *label;
  throw ArgumentError("'" + std::string(name) + "' is not a relevance label");
}

EmbeddingVector::EmbeddingVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("embedding has zero dimensions");
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw ValidationError("embedding contains a non-finite value");
    }
  }
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::kLowerIsBetter ? "lower_is_better"
                                              : "higher_is_better";
}

}  // namespace banklens
