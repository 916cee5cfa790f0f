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

#include "banklens/embed/provider.h"

#include <cmath>
#include <fstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "banklens/core/error.h"
#include "banklens/text/normalize.h"
#include "banklens/text/tokenizer.h"

namespace banklens::embed {
namespace {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

EmbeddingVector EmbeddingProvider::embed_one(const std::string& text) const {
  std::vector<EmbeddingVector> out = embed({text});
  if (out.size() != 1) throw ProviderError(id() + ": expected one vector");
  return std::move(out.front());
}

HashProvider::HashProvider(int dims, std::uint64_t seed)
    : dims_(dims), seed_(seed) {
  if (dims < 8) {
    throw ArgumentError("hash provider needs dims >= 8, got " +
                        std::to_string(dims));
  }
}

std::string HashProvider::id() const {
  return "hash-" + std::to_string(dims_) + "-" + std::to_string(seed_);
}

void HashProvider::add_direction(std::string_view key,
                                 std::vector<double>& acc) const {
  std::uint64_t state = fnv1a64(key) ^ seed_;
  for (double& x : acc) {
    // top 53 bits to [-1, 1)
    x += static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-52 - 1.0;
  }
}

std::vector<EmbeddingVector> HashProvider::embed(
    const std::vector<std::string>& texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    std::vector<double> acc(static_cast<std::size_t>(dims_), 0.0);
    const std::vector<Token> tokens = text::tokenize(text);
    for (const Token& t : tokens) add_direction(t.normalized, acc);
    if (tokens.empty()) add_direction(text, acc);
    double norm = 0.0;
    for (double x : acc) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : acc) x /= norm;
    out.emplace_back(std::move(acc));
  }
  return out;
}

FileProvider::FileProvider(const std::filesystem::path& path)
    : id_("file:" + path.filename().string()) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!row.is_object() || !row.contains("text") || !row["text"].is_string() ||
        !row.contains("vector") || !row["vector"].is_array()) {
      throw ParseError("expected {\"text\": string, \"vector\": [numbers]}",
                       line_no);
    }
    std::vector<double> values;
    for (const auto& x : row["vector"]) {
      if (!x.is_number()) throw ParseError("non-numeric vector entry", line_no);
      values.push_back(x.get<double>());
    }
    const int dims = static_cast<int>(values.size());
    if (dims_ == 0) dims_ = dims;
    if (dims != dims_) {
      throw ParseError("vector has " + std::to_string(dims) + " dims, expected " +
                           std::to_string(dims_),
                       line_no);
    }
    try {
      vectors_.insert_or_assign(
          text::normalize_text(row["text"].get<std::string>()),
          EmbeddingVector(std::move(values)));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (vectors_.empty()) throw ParseError("no vectors in " + path.string());
}

std::vector<EmbeddingVector> FileProvider::embed(
    const std::vector<std::string>& texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    auto it = vectors_.find(text::normalize_text(text));
    if (it == vectors_.end()) {
      throw LookupError(id_ + ": no vector for \"" + text + "\"");
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace banklens::embed
