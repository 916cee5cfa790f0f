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

#ifndef BANKLENS_EMBED_PROVIDER_H_
#define BANKLENS_EMBED_PROVIDER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "banklens/core/types.h"

namespace banklens::embed {

// Maps texts to vectors of a fixed dimension. Implementations are
// deterministic per id() and safe to call from several threads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts) const = 0;
  virtual int dims() const = 0;
  virtual std::string id() const = 0;

  EmbeddingVector embed_one(const std::string& text) const;
};

// Test double. Each token gets a seeded pseudo-random direction; a text is
// the unit-normalized sum of its token directions, so texts that share
// tokens point the same way.
class HashProvider : public EmbeddingProvider {
 public:
  // Throws ArgumentError when dims < 8.
  HashProvider(int dims, std::uint64_t seed);

  std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts) const override;
  int dims() const override { return dims_; }
  std::string id() const override;

 private:
  void add_direction(std::string_view key, std::vector<double>& acc) const;

  int dims_;
  std::uint64_t seed_;
};

// Serves vectors from a JSON-lines file of {"text": ..., "vector": [...]}.
// Keys are compared after normalization.
class FileProvider : public EmbeddingProvider {
 public:
  // Throws IoError or ParseError.
  explicit FileProvider(const std::filesystem::path& path);

  // Throws LookupError for a text that is not in the file.
  std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts) const override;
  int dims() const override { return dims_; }
  std::string id() const override { return id_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  std::map<std::string, EmbeddingVector> vectors_;
  int dims_ = 0;
  std::string id_;
};

}  // namespace banklens::embed

#endif  // BANKLENS_EMBED_PROVIDER_H_
