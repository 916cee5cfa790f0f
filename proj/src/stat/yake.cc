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

#include "banklens/stat/yake.h"

#include <unicode/uchar.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "banklens/core/error.h"
#include "banklens/core/utf8.h"
#include "banklens/text/tokenizer.h"

namespace banklens::stat {
namespace {

constexpr std::u32string_view kAsciiPunctuation =
    U"!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

bool is_ascii_punct(char32_t c) {
  return kAsciiPunctuation.find(c) != std::u32string_view::npos;
}

bool all_ascii_punct(std::u32string_view word) {
  return std::all_of(word.begin(), word.end(), is_ascii_punct);
}

bool py_isdigit(char32_t c) {
  const int type = u_getIntPropertyValue(static_cast<UChar32>(c),
                                         UCHAR_NUMERIC_TYPE);
  return type == U_NT_DECIMAL || type == U_NT_DIGIT;
}

bool py_isalpha(char32_t c) {
  return U_GET_GC_MASK(static_cast<UChar32>(c)) & U_GC_L_MASK;
}

bool py_isupper_char(char32_t c) {
  return u_isUUppercase(static_cast<UChar32>(c));
}

bool py_isdigit(std::u32string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char32_t c) { return py_isdigit(c); });
}

// str.isupper(): at least one cased scalar and none lower or title case.
bool py_isupper(std::u32string_view s) {
  bool cased = false;
  for (char32_t c : s) {
    const auto u = static_cast<UChar32>(c);
    if (u_isULowercase(u) || u_istitle(u)) return false;
    if (u_isUUppercase(u)) cased = true;
  }
  return cased;
}

std::u32string without(std::u32string_view s, char32_t c, std::size_t limit) {
  std::u32string out;
  std::size_t removed = 0;
  for (char32_t d : s) {
    if (d == c && removed < limit) {
      ++removed;
      continue;
    }
    out.push_back(d);
  }
  return out;
}

// d digit, u unusual, a acronym, n proper noun, p plain.
char word_tag(std::u32string_view word, std::size_t pos_in_sentence) {
  const std::u32string no_commas = without(word, U',', word.size());
  if (py_isdigit(no_commas) || py_isdigit(without(no_commas, U'.', 1))) {
    return 'd';
  }
  int digits = 0;
  int alpha = 0;
  int punct = 0;
  for (char32_t c : word) {
    if (py_isdigit(c)) ++digits;
    if (py_isalpha(c)) ++alpha;
    if (is_ascii_punct(c)) ++punct;
  }
  if ((digits > 0 && alpha > 0) || (digits == 0 && alpha == 0) || punct > 1) {
    return 'u';
  }
  if (py_isupper(word)) return 'a';
  if (word.size() > 1 && py_isupper_char(word[0]) && pos_in_sentence > 0) {
    const auto upper = std::count_if(word.begin(), word.end(), py_isupper_char);
    if (upper == 1) return 'n';
  }
  return 'p';
}

bool discarded(char tag) { return tag == 'u' || tag == 'd'; }

struct Term {
  bool stopword = false;
  double tf = 0.0;
  double tf_a = 0.0;
  double tf_n = 0.0;
  std::vector<std::size_t> sentences;  // distinct, ascending
  double h = 0.0;
};

struct Candidate {
  std::string key;
  std::vector<std::size_t> terms;
  std::vector<std::string> tags;
  TokenRange first;
  double tf = 0.0;
  double h = 0.0;

  bool valid(const std::vector<Term>& all) const {
    const bool clean_tags =
        std::any_of(tags.begin(), tags.end(), [](const std::string& t) {
          return t.find_first_of("ud") == std::string::npos;
        });
    return clean_tags && !all[terms.front()].stopword &&
           !all[terms.back()].stopword;
  }
};

struct BlockWord {
  char tag;
  std::size_t term;
  std::size_t token;
};

class YakeBuilder {
 public:
  YakeBuilder(const Document& doc, const YakeParams& params,
              const text::Stopwords& stopwords)
      : doc_(doc), params_(params), stopwords_(stopwords) {}

  std::vector<ScoredPhrase> run() {
    scan();
    if (!score_terms()) return {};
    score_candidates();
    return select();
  }

 private:
  std::size_t term_for(const Token& token) {
    std::u32string key = decode_utf8(token.normalized);
    const bool plain_stop = stopwords_.contains(token.normalized);
    if (key.size() > 3 && key.back() == U's') key.pop_back();
    const std::string key_utf8 = encode_utf8(key);
    if (auto it = term_index_.find(key_utf8); it != term_index_.end()) {
      return it->second;
    }
    std::u32string bare;
    for (char32_t c : key) {
      if (!is_ascii_punct(c)) bare.push_back(c);
    }
    Term term;
    term.stopword =
        plain_stop || stopwords_.contains(key_utf8) || bare.size() < 3;
    terms_.push_back(term);
    term_index_.emplace(key_utf8, terms_.size() - 1);
    return terms_.size() - 1;
  }

  void add_edge(std::size_t left, std::size_t right) {
    edges_[{left, right}] += 1.0;
  }

  void add_candidate(const std::vector<BlockWord>& words) {
    const TokenRange range{words.front().token, words.back().token + 1};
    std::string key = doc_.normalized_text(range);
    std::string tags;
    for (const BlockWord& w : words) tags.push_back(w.tag);
    auto it = candidate_index_.find(key);
    if (it == candidate_index_.end()) {
      Candidate c;
      c.key = key;
      for (const BlockWord& w : words) c.terms.push_back(w.term);
      c.first = range;
      candidates_.push_back(std::move(c));
      it = candidate_index_.emplace(std::move(key), candidates_.size() - 1)
               .first;
    }
    Candidate& c = candidates_[it->second];
    if (std::find(c.tags.begin(), c.tags.end(), tags) == c.tags.end()) {
      c.tags.push_back(tags);
    }
    c.tf += 1.0;
  }

  void scan() {
    const auto& tokens = doc_.tokens();
    const std::vector<bool> breaks = text::punctuation_breaks(doc_);
    const auto window = static_cast<std::size_t>(params_.window);
    const auto span = static_cast<std::size_t>(params_.max_ngram - 1);
    for (std::size_t sid = 0; sid < doc_.sentences().size(); ++sid) {
      const TokenRange sentence = doc_.sentences()[sid];
      std::vector<BlockWord> block;
      for (std::size_t i = sentence.begin; i < sentence.end; ++i) {
        const std::u32string word = decode_utf8(tokens[i].surface);
        if ((i > sentence.begin && breaks[i]) || all_ascii_punct(word)) {
          block.clear();
        }
        if (all_ascii_punct(word)) continue;

        const char tag = word_tag(word, i - sentence.begin);
        const std::size_t t = term_for(tokens[i]);
        Term& term = terms_[t];
        term.tf += 1.0;
        if (tag == 'a') term.tf_a += 1.0;
        if (tag == 'n') term.tf_n += 1.0;
        if (term.sentences.empty() || term.sentences.back() != sid) {
          term.sentences.push_back(sid);
        }

        if (!discarded(tag)) {
          const std::size_t from = block.size() > window ? block.size() - window : 0;
          for (std::size_t w = from; w < block.size(); ++w) {
            if (!discarded(block[w].tag)) add_edge(block[w].term, t);
          }
        }

        const BlockWord current{tag, t, i};
        add_candidate({current});
        std::vector<BlockWord> ngram = {current};
        const std::size_t from = block.size() > span ? block.size() - span : 0;
        for (std::size_t w = block.size(); w-- > from;) {
          ngram.insert(ngram.begin(), block[w]);
          add_candidate(ngram);
        }
        block.push_back(current);
      }
    }
  }

  bool score_terms() {
    std::vector<double> valid_tfs;
    double max_tf = 0.0;
    for (const Term& t : terms_) {
      if (!t.stopword) valid_tfs.push_back(t.tf);
      max_tf = std::max(max_tf, t.tf);
    }
    if (valid_tfs.empty()) return false;
    const double n = static_cast<double>(valid_tfs.size());
    const double avg = std::accumulate(valid_tfs.begin(), valid_tfs.end(), 0.0) / n;
    double var = 0.0;
    for (double tf : valid_tfs) var += (tf - avg) * (tf - avg);
    const double std_tf = std::sqrt(var / n);

    std::vector<double> out_count(terms_.size(), 0.0);
    std::vector<double> out_sum(terms_.size(), 0.0);
    std::vector<double> in_count(terms_.size(), 0.0);
    std::vector<double> in_sum(terms_.size(), 0.0);
    for (const auto& [edge, weight] : edges_) {
      out_count[edge.first] += 1.0;
      out_sum[edge.first] += weight;
      in_count[edge.second] += 1.0;
      in_sum[edge.second] += weight;
    }

    const double sentences = static_cast<double>(doc_.sentences().size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      Term& t = terms_[i];
      const double pwl = in_sum[i] == 0.0 ? 0.0 : in_count[i] / in_sum[i];
      const double pwr = out_sum[i] == 0.0 ? 0.0 : out_count[i] / out_sum[i];
      const double wrel =
          0.5 + pwl * (t.tf / max_tf) + (0.5 + pwr * (t.tf / max_tf));
      const double wfreq = t.tf / (avg + std_tf);
      const double wspread = static_cast<double>(t.sentences.size()) / sentences;
      const double wcase = std::max(t.tf_a, t.tf_n) / (1.0 + std::log(t.tf));
      const double wpos = std::log(std::log(3.0 + median(t.sentences)));
      t.h = wpos * wrel / (wcase + wfreq / wrel + wspread / wrel);
    }
    return true;
  }

  static double median(const std::vector<std::size_t>& sorted) {
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return static_cast<double>(sorted[n / 2]);
    return (static_cast<double>(sorted[n / 2 - 1]) +
            static_cast<double>(sorted[n / 2])) / 2.0;
  }

  double edge_weight(std::size_t left, std::size_t right) const {
    const auto it = edges_.find({left, right});
    return it == edges_.end() ? 0.0 : it->second;
  }

  void score_candidates() {
    for (Candidate& c : candidates_) {
      if (!c.valid(terms_)) continue;
      double sum = 0.0;
      double prod = 1.0;
      for (std::size_t k = 0; k < c.terms.size(); ++k) {
        const Term& term = terms_[c.terms[k]];
        if (!term.stopword) {
          sum += term.h;
          prod *= term.h;
          continue;
        }
        // Stopword: weighted by bigram probabilities with its neighbours.
        double before = 0.0;
        if (k > 0) {
          const std::size_t prev = c.terms[k - 1];
          before = edge_weight(prev, c.terms[k]) / terms_[prev].tf;
        }
        double after = 0.0;
        if (k + 1 < c.terms.size()) {
          const std::size_t next = c.terms[k + 1];
          after = edge_weight(c.terms[k], next) / terms_[next].tf;
        }
        const double prob = before * after;
        prod *= 1.0 + (1.0 - prob);
        sum -= 1.0 - prob;
      }
      c.h = prod / ((sum + 1.0) * c.tf);
    }
  }

  std::vector<ScoredPhrase> select() const {
    std::vector<const Candidate*> ranked;
    for (const Candidate& c : candidates_) {
      if (c.valid(terms_)) ranked.push_back(&c);
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Candidate* a, const Candidate* b) {
                       return a->h < b->h;
                     });

    const auto top = static_cast<std::size_t>(params_.top_n);
    std::vector<ScoredPhrase> out;
    std::vector<std::u32string> kept;
    for (const Candidate* c : ranked) {
      if (out.size() == top) break;
      const std::u32string key = decode_utf8(c->key);
      if (params_.dedup_threshold < 1.0) {
        const bool near_duplicate =
            std::any_of(kept.begin(), kept.end(), [&](const std::u32string& k) {
              return levenshtein_similarity(key, k) > params_.dedup_threshold;
            });
        if (near_duplicate) continue;
      }
      kept.push_back(key);
      out.push_back({CandidatePhrase::from_document(doc_, c->first), c->h,
                     Polarity::kLowerIsBetter});
    }
    return out;
  }

  const Document& doc_;
  const YakeParams& params_;
  const text::Stopwords& stopwords_;
  std::vector<Term> terms_;
  std::unordered_map<std::string, std::size_t> term_index_;
  std::map<std::pair<std::size_t, std::size_t>, double> edges_;
  std::vector<Candidate> candidates_;
  std::unordered_map<std::string, std::size_t> candidate_index_;
};

}  // namespace

void YakeParams::validate() const {
  if (max_ngram < 1) throw ArgumentError("YAKE max_ngram must be >= 1");
  if (window < 1) throw ArgumentError("YAKE window must be >= 1");
  if (top_n < 1) throw ArgumentError("YAKE top_n must be >= 1");
  if (!(dedup_threshold >= 0.0 && dedup_threshold <= 1.0)) {
    throw ArgumentError("YAKE dedup_threshold must lie in [0, 1]");
  }
}

std::vector<ScoredPhrase> yake_extract(const Document& doc,
                                       const YakeParams& params,
                                       const text::Stopwords& stopwords) {
  params.validate();
  return YakeBuilder(doc, params, stopwords).run();
}

double levenshtein_similarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  std::vector<std::size_t> previous(b.size() + 1);
  std::vector<std::size_t> current(b.size() + 1);
  std::iota(previous.begin(), previous.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    current[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      current[j] = std::min({current[j - 1] + 1, previous[j] + 1,
                             previous[j - 1] + cost});
    }
    std::swap(previous, current);
  }
  return 1.0 - static_cast<double>(previous[b.size()]) /
                   static_cast<double>(longest);
}

}  // namespace banklens::stat
