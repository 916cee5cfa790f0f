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

#include "banklens/eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "banklens/core/error.h"
#include "banklens/text/normalize.h"

namespace banklens::eval {
namespace {

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

std::string percent(const std::optional<double>& v) {
  if (!v) return "-";
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%.1f", *v * 100.0);
  return buffer;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_names)
    : class_names_(std::move(class_names)),
      counts_(class_names_.size(), std::vector<int>(class_names_.size(), 0)) {
  std::vector<std::string> sorted = class_names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError("duplicate class names");
  }
}

int ConfusionMatrix::total() const {
  int n = 0;
  for (const auto& row : counts_) {
    for (int c : row) n += c;
  }
  return n;
}

int ConfusionMatrix::trace() const {
  int n = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) n += counts_[i][i];
  return n;
}

int ConfusionMatrix::index_of(const std::string& name) const {
  const auto it = std::find(class_names_.begin(), class_names_.end(), name);
  if (it == class_names_.end()) throw ArgumentError("unknown label '" + name + "'");
  return static_cast<int>(it - class_names_.begin());
}

void ConfusionMatrix::add(const std::string& gold, const std::string& predicted) {
  ++counts_[static_cast<std::size_t>(index_of(gold))]
           [static_cast<std::size_t>(index_of(predicted))];
}

ConfusionMatrix confusion(const std::vector<std::string>& gold,
                          const std::vector<std::string>& predicted,
                          const std::vector<std::string>& class_names) {
  if (gold.size() != predicted.size()) {
    throw ArgumentError("gold has " + std::to_string(gold.size()) +
                        " labels, predictions have " + std::to_string(predicted.size()));
  }
  ConfusionMatrix cm(class_names);
  for (std::size_t i = 0; i < gold.size(); ++i) cm.add(gold[i], predicted[i]);
  return cm;
}

MetricReport metrics(const ConfusionMatrix& cm) {
  const int n = cm.total();
  if (n == 0) throw ArgumentError("metrics need at least one sample");
  MetricReport out;
  out.n = n;
  out.accuracy = static_cast<double>(cm.trace()) / n;
  const auto& m = cm.counts();
  const std::size_t k = m.size();
  for (std::size_t c = 0; c < k; ++c) {
    int predicted = 0;
    int actual = 0;
    for (std::size_t j = 0; j < k; ++j) {
      predicted += m[j][c];
      actual += m[c][j];
    }
    ClassMetrics cls;
    cls.precision = ratio(m[c][c], predicted);
    cls.recall = ratio(m[c][c], actual);
    cls.f1 = harmonic(cls.precision, cls.recall);
    out.precision += cls.precision / static_cast<double>(k);
    out.recall += cls.recall / static_cast<double>(k);
    out.f1 += cls.f1 / static_cast<double>(k);
    out.per_class[cm.class_names()[c]] = cls;
  }
  return out;
}

MetricReport keyword_eval(const std::vector<std::set<std::string>>& gold,
                          const std::vector<std::vector<std::string>>& predicted,
                          int k) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (gold.size() != predicted.size()) {
    throw ArgumentError("gold and predictions cover different document counts");
  }
  MetricReport out;
  long hits = 0;
  long predicted_total = 0;
  long gold_total = 0;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    if (gold[d].empty()) {
      ++out.skipped;
      continue;
    }
    std::set<std::string> gold_norm;
    for (const std::string& g : gold[d]) gold_norm.insert(text::normalize_text(g));
    std::set<std::string> top;
    for (const std::string& p : predicted[d]) {
      if (static_cast<int>(top.size()) == k) break;
      top.insert(text::normalize_text(p));
    }
    for (const std::string& p : top) hits += gold_norm.count(p);
    predicted_total += static_cast<long>(top.size());
    gold_total += static_cast<long>(gold_norm.size());
    ++out.n;
  }
  if (out.n == 0) throw ArgumentError("no document has gold keywords");
  out.precision = ratio(static_cast<double>(hits), static_cast<double>(predicted_total));
  out.recall = ratio(static_cast<double>(hits), static_cast<double>(gold_total));
  out.f1 = harmonic(out.precision, out.recall);
  out.accuracy = out.precision;
  return out;
}

MetricReport keyword_eval(const std::vector<std::set<std::string>>& gold,
                          const std::vector<std::vector<KeywordResult>>& predicted,
                          int k) {
  std::vector<std::vector<std::string>> phrases;
  for (const auto& doc : predicted) {
    std::vector<std::string> p;
    for (const KeywordResult& kw : doc) p.push_back(kw.phrase().normalized);
    phrases.push_back(std::move(p));
  }
  return keyword_eval(gold, phrases, k);
}

std::vector<DocKeywords> read_keyword_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<DocKeywords> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      DocKeywords doc;
      const auto& id = j.at("doc_id");
      doc.doc_id = id.is_string() ? id.get<std::string>() : id.dump();
      for (const auto& kw : j.at("keywords")) {
        doc.phrases.push_back(kw.is_string() ? kw.get<std::string>()
                                             : kw.at("phrase").get<std::string>());
      }
      out.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what(), number);
    }
  }
  return out;
}

MetricReport keyword_eval(const std::vector<DocKeywords>& gold,
                          const std::vector<DocKeywords>& predicted, int k) {
  std::map<std::string, const DocKeywords*> by_id;
  for (const DocKeywords& d : predicted) by_id.emplace(d.doc_id, &d);
  std::vector<std::set<std::string>> g;
  std::vector<std::vector<std::string>> p;
  for (const DocKeywords& d : gold) {
    g.emplace_back(d.phrases.begin(), d.phrases.end());
    const auto it = by_id.find(d.doc_id);
    p.push_back(it == by_id.end() ? std::vector<std::string>{} : it->second->phrases);
  }
  return keyword_eval(g, p, k);
}

TableRow table_row(const std::string& name, const MetricReport& report) {
  return {name, report.accuracy, report.precision, report.recall, report.f1};
}

std::string render_table(const std::vector<TableRow>& rows, const std::string& averaging) {
  if (rows.empty()) throw ArgumentError("table needs at least one row");
  const std::vector<std::string> header = {"Model", "Accuracy (%)", "Precision (%)",
                                           "Recall (%)", "F1-score (%)"};
  std::vector<std::vector<std::string>> cells;
  for (const TableRow& r : rows) {
    cells.push_back({r.name, percent(r.accuracy), percent(r.precision), percent(r.recall),
                     percent(r.f1)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "# " << averaging << "-averaged precision, recall and F1\n";
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  };
  line(header);
  std::size_t total = width[0];
  for (std::size_t c = 1; c < width.size(); ++c) total += width[c] + 2;
  out << std::string(total, '-') << '\n';
  for (const auto& row : cells) line(row);
  return out.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "name,accuracy,precision,recall,f1\n";
  for (const TableRow& r : rows) {
    out << csv_escape(r.name);
    for (const auto& v : {r.accuracy, r.precision, r.recall, r.f1}) {
      out << ',' << (v ? percent(v) : "");
    }
    out << '\n';
  }
  return out.str();
}

std::vector<TableRow> parse_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::vector<TableRow> rows;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (number == 1 || line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 5) throw ParseError("expected 5 CSV cells", number);
    TableRow row{cells[0], {}, {}, {}, {}};
    std::optional<double>* slots[] = {&row.accuracy, &row.precision, &row.recall, &row.f1};
    for (std::size_t i = 0; i < 4; ++i) {
      if (cells[i + 1].empty()) continue;
      try {
        *slots[i] = std::stod(cells[i + 1]) / 100.0;
      } catch (const std::exception&) {
        throw ParseError("bad number '" + cells[i + 1] + "'", number);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Split stratified_split(const std::vector<std::string>& labels, double test_fraction,
                       std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ArgumentError("test_fraction must lie in (0, 1)");
  }
  std::map<std::string, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
  std::mt19937_64 rng(seed);
  Split out;
  for (auto& [label, indices] : by_label) {
    std::shuffle(indices.begin(), indices.end(), rng);
    const auto n_test = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(indices.size())));
    out.test.insert(out.test.end(), indices.begin(),
                    indices.begin() + static_cast<std::ptrdiff_t>(n_test));
    out.train.insert(out.train.end(),
                     indices.begin() + static_cast<std::ptrdiff_t>(n_test), indices.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace banklens::eval
