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

#include "banklens/classify/dataset.h"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "banklens/core/error.h"
#include "banklens/text/normalize.h"

namespace banklens::classify {

std::vector<LabeledText> read_labeled(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<LabeledText> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      LabeledText row;
      row.id = j.contains("id") ? (j["id"].is_string() ? j["id"].get<std::string>()
                                                       : j["id"].dump())
                                : std::to_string(number);
      row.text = j.at("text").get<std::string>();
      row.label = j.at("label").get<std::string>();
      out.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path.string() + ": " + e.what(), number);
    }
  }
  return out;
}

std::vector<Example> build_examples(const std::vector<LabeledText>& data,
                                    const std::vector<std::string>& class_names,
                                    const embed::EmbeddingProvider& provider) {
  std::vector<std::string> texts;
  std::vector<int> labels;
  for (const LabeledText& row : data) {
    const auto it = std::find(class_names.begin(), class_names.end(), row.label);
    if (it == class_names.end()) {
      throw ArgumentError("label '" + row.label + "' is not a known class");
    }
    labels.push_back(static_cast<int>(it - class_names.begin()));
    texts.push_back(text::normalize_text(row.text));
  }
  std::vector<EmbeddingVector> vectors = provider.embed(texts);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.id() + " returned the wrong number of vectors");
  }
  std::vector<Example> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.push_back({std::move(vectors[i]), labels[i]});
  }
  return out;
}

}  // namespace banklens::classify
