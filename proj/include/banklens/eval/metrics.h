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

#ifndef BANKLENS_EVAL_METRICS_H_
#define BANKLENS_EVAL_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "banklens/core/scored_phrase.h"

namespace banklens::eval {

class ConfusionMatrix {
 public:
  // Zero counts. Throws ArgumentError for duplicate class names.
  explicit ConfusionMatrix(std::vector<std::string> class_names);

  const std::vector<std::string>& class_names() const { return class_names_; }
  // counts()[gold][predicted]
  const std::vector<std::vector<int>>& counts() const { return counts_; }
  int size() const { return static_cast<int>(class_names_.size()); }
  int total() const;
  int trace() const;

  // Throws ArgumentError for an unknown class.
  void add(const std::string& gold, const std::string& predicted);
  int index_of(const std::string& name) const;

 private:
  std::vector<std::string> class_names_;
  std::vector<std::vector<int>> counts_;
};

// Throws ArgumentError on a length mismatch or an unknown label.
ConfusionMatrix confusion(const std::vector<std::string>& gold,
                          const std::vector<std::string>& predicted,
                          const std::vector<std::string>& class_names);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricReport {
  double accuracy = 0.0;
  double precision = 0.0;  // macro for classification, micro for keywords
  double recall = 0.0;
  double f1 = 0.0;
  std::map<std::string, ClassMetrics> per_class;
  int n = 0;
  int skipped = 0;  // keyword docs without gold phrases
};

// Macro averages over every class in the matrix. Zero denominators give 0.
// Throws ArgumentError for an empty matrix.
MetricReport metrics(const ConfusionMatrix& cm);

// Exact match on normalized phrases against each document's gold set, using
// each document's first k predictions. Precision, recall and F1 are micro
// averaged; accuracy is reported as precision@k. Documents with an empty gold
// set are skipped and counted. Throws ArgumentError for k < 1, a length
// mismatch or no scorable document.
MetricReport keyword_eval(const std::vector<std::set<std::string>>& gold,
                          const std::vector<std::vector<std::string>>& predicted,
                          int k);
MetricReport keyword_eval(const std::vector<std::set<std::string>>& gold,
                          const std::vector<std::vector<KeywordResult>>& predicted,
                          int k);

// JSON lines of {"doc_id": ..., "keywords": [...]} where each keyword is a
// string or an object with "phrase". Works for gold files and for extract
// output alike. Throws IoError or ParseError.
struct DocKeywords {
  std::string doc_id;
  std::vector<std::string> phrases;
};
std::vector<DocKeywords> read_keyword_file(const std::string& path);

// Aligns predictions to gold by doc_id; a doc missing from the predictions
// counts as predicting nothing.
MetricReport keyword_eval(const std::vector<DocKeywords>& gold,
                          const std::vector<DocKeywords>& predicted, int k);

struct TableRow {
  std::string name;
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

TableRow table_row(const std::string& name, const MetricReport& report);

// Percentages to one decimal, "-" for missing cells, rows in input order.
// Throws ArgumentError for no rows.
std::string render_table(const std::vector<TableRow>& rows,
                         const std::string& averaging = "macro");
// name,accuracy,precision,recall,f1 with the same rounding; empty cells for
// missing values.
std::string render_csv(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_csv(const std::string& csv);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Per label, a seeded shuffle sends round(test_fraction * count) items to
// test. Indices come back sorted. Throws ArgumentError unless 0 <
// test_fraction < 1.
Split stratified_split(const std::vector<std::string>& labels,
                       double test_fraction = 0.2, std::uint64_t seed = 42);

}  // namespace banklens::eval

#endif  // BANKLENS_EVAL_METRICS_H_
