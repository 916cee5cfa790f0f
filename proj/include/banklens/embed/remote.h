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

#ifndef BANKLENS_EMBED_REMOTE_H_
#define BANKLENS_EMBED_REMOTE_H_

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "banklens/embed/provider.h"

namespace banklens::embed {

struct RemoteOptions {
  std::string endpoint;  // scheme://host:port, optionally with a path prefix
  std::string model;     // empty lets the bridge pick its default
  int batch_size = 64;
  int timeout_seconds = 30;
};

struct BridgeHealth {
  std::string status;
  std::string model;
  int dims = 0;
};

// Client for the embedding bridge: POST /embed and GET /health. Every
// transport or protocol failure surfaces as ProviderError naming the URL.
class RemoteProvider : public EmbeddingProvider {
 public:
  explicit RemoteProvider(RemoteOptions options);

  std::vector<EmbeddingVector> embed(
      const std::vector<std::string>& texts) const override;
  // Asks /health on first use.
  int dims() const override;
  std::string id() const override;

  BridgeHealth health() const;

 private:
  std::vector<EmbeddingVector> embed_batch(
      const std::vector<std::string>& texts) const;
  void remember(int dims, const std::string& model) const;

  RemoteOptions options_;
  std::string scheme_host_;
  std::string prefix_;
  mutable std::mutex mutex_;
  mutable std::optional<int> dims_;
  mutable std::string served_model_;
};

}  // namespace banklens::embed

#endif  // BANKLENS_EMBED_REMOTE_H_
