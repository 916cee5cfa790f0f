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

#ifndef BANKLENS_CLASSIFY_DATASET_H_
#define BANKLENS_CLASSIFY_DATASET_H_

#include <filesystem>
#include <string>
#include <vector>

#include "banklens/classify/linear.h"
#include "banklens/embed/provider.h"

namespace banklens::classify {

struct LabeledText {
  std::string id;
  std::string text;
  std::string label;
};

// JSON lines with "text" and "label" ("id" optional, defaults to the line
// number). Throws IoError or ParseError with the line.
std::vector<LabeledText> read_labeled(const std::filesystem::path& path);

// Normalizes and embeds every text in one provider call. Throws
// ArgumentError for a label outside `class_names`.
std::vector<Example> build_examples(const std::vector<LabeledText>& data,
                                    const std::vector<std::string>& class_names,
                                    const embed::EmbeddingProvider& provider);

}  // namespace banklens::classify

#endif  // BANKLENS_CLASSIFY_DATASET_H_
