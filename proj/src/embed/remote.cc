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

#include "banklens/embed/remote.h"

#include <algorithm>
#include <string>
#include <utility>

#include "httplib.h"
#include "json.hpp"

#include "banklens/core/endpoint.h"
#include "banklens/core/error.h"

namespace banklens::embed {
namespace {

using nlohmann::json;

std::string snippet(const std::string& body) {
  return body.size() > 200 ? body.substr(0, 200) + "..." : body;
}

}  // namespace

RemoteProvider::RemoteProvider(RemoteOptions options)
    : options_(std::move(options)) {
  if (options_.batch_size < 1) throw ArgumentError("batch_size must be >= 1");
  Endpoint endpoint = split_endpoint(options_.endpoint);
  scheme_host_ = std::move(endpoint.scheme_host);
  prefix_ = std::move(endpoint.prefix);
}

std::string RemoteProvider::id() const {
  std::lock_guard<std::mutex> lock(mutex_);
  const std::string& model =
      served_model_.empty() ? options_.model : served_model_;
  return "remote:" + options_.endpoint + (model.empty() ? "" : "#" + model);
}

void RemoteProvider::remember(int dims, const std::string& model) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (dims_ && *dims_ != dims) {
    throw ProviderError(options_.endpoint + ": dims changed from " +
                        std::to_string(*dims_) + " to " + std::to_string(dims));
  }
  dims_ = dims;
  if (!model.empty()) served_model_ = model;
}

int RemoteProvider::dims() const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (dims_) return *dims_;
  }
  return health().dims;
}

BridgeHealth RemoteProvider::health() const {
  const std::string url = options_.endpoint + "/health";
  httplib::Client client(scheme_host_);
  client.set_connection_timeout(options_.timeout_seconds);
  client.set_read_timeout(options_.timeout_seconds);
  auto res = client.Get(prefix_ + "/health");
  if (!res) {
    throw ProviderError("GET " + url + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw ProviderError("GET " + url + ": HTTP " + std::to_string(res->status) +
                        " " + snippet(res->body));
  }
  BridgeHealth health;
  try {
    const json body = json::parse(res->body);
    health.status = body.at("status").get<std::string>();
    health.model = body.at("model").get<std::string>();
    health.dims = body.at("dims").get<int>();
  } catch (const json::exception& e) {
    throw ProviderError("GET " + url + ": malformed reply: " + e.what());
  }
  if (health.status != "ok" || health.dims < 1) {
    throw ProviderError("GET " + url + ": unhealthy reply " + snippet(res->body));
  }
  remember(health.dims, health.model);
  return health;
}

std::vector<EmbeddingVector> RemoteProvider::embed_batch(
    const std::vector<std::string>& texts) const {
  const std::string url = options_.endpoint + "/embed";
  json request = {{"texts", texts}};
  if (!options_.model.empty()) request["model"] = options_.model;

  httplib::Client client(scheme_host_);
  client.set_connection_timeout(options_.timeout_seconds);
  client.set_read_timeout(options_.timeout_seconds);
  auto res = client.Post(prefix_ + "/embed", request.dump(), "application/json");
  if (!res) {
    throw ProviderError("POST " + url + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw ProviderError("POST " + url + ": HTTP " + std::to_string(res->status) +
                        " " + snippet(res->body));
  }
  std::vector<EmbeddingVector> out;
  int dims = 0;
  std::string model;
  try {
    const json body = json::parse(res->body);
    dims = body.at("dims").get<int>();
    model = body.at("model").get<std::string>();
    const json& vectors = body.at("vectors");
    if (!vectors.is_array() || vectors.size() != texts.size()) {
      throw ProviderError("POST " + url + ": expected " +
                          std::to_string(texts.size()) + " vectors");
    }
    for (const json& v : vectors) {
      std::vector<double> values = v.get<std::vector<double>>();
      if (static_cast<int>(values.size()) != dims) {
        throw ProviderError("POST " + url + ": vector of " +
                            std::to_string(values.size()) +
                            " dims, reply says " + std::to_string(dims));
      }
      out.emplace_back(std::move(values));
    }
  } catch (const json::exception& e) {
    throw ProviderError("POST " + url + ": malformed reply: " + e.what());
  } catch (const ValidationError& e) {
    throw ProviderError("POST " + url + ": " + e.what());
  }
  remember(dims, model);
  return out;
}

std::vector<EmbeddingVector> RemoteProvider::embed(
    const std::vector<std::string>& texts) const {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  const std::size_t batch = static_cast<std::size_t>(options_.batch_size);
  for (std::size_t i = 0; i < texts.size(); i += batch) {
    std::vector<std::string> chunk(
        texts.begin() + static_cast<std::ptrdiff_t>(i),
        texts.begin() + static_cast<std::ptrdiff_t>(std::min(texts.size(), i + batch)));
    for (EmbeddingVector& v : embed_batch(chunk)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace banklens::embed
