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

#include "banklens/classify/client.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"

#include "banklens/core/endpoint.h"
#include "banklens/core/error.h"
#include "banklens/core/types.h"

namespace banklens::classify {
namespace {

using nlohmann::json;

std::string snippet(const std::string& body) {
  return body.size() > 200 ? body.substr(0, 200) + "..." : body;
}

bool known_label(Task task, const std::string& label) {
  if (task == Task::kRelevance) return try_parse_relevance(label).has_value();
  return try_parse_aspect(label).has_value();
}

}  // namespace

std::string_view to_string(Task task) {
  return task == Task::kRelevance ? "relevance" : "aspect";
}

HttpClassifierClient::HttpClassifierClient(ClassifierOptions options)
    : options_(std::move(options)) {
  if (options_.batch_size < 1) throw ArgumentError("batch_size must be >= 1");
  if (options_.max_in_flight < 1) {
    throw ArgumentError("max_in_flight must be >= 1");
  }
  Endpoint endpoint = split_endpoint(options_.endpoint);
  scheme_host_ = std::move(endpoint.scheme_host);
  prefix_ = std::move(endpoint.prefix);
}

std::vector<RemoteLabel> HttpClassifierClient::classify_batch(
    Task task, const std::vector<std::string>& texts) const {
  const std::string url = "POST " + options_.endpoint + "/classify";
  const json request = {{"task", std::string(to_string(task))}, {"texts", texts}};
  httplib::Client client(scheme_host_);
  client.set_connection_timeout(options_.timeout_seconds);
  client.set_read_timeout(options_.timeout_seconds);
  auto res = client.Post(prefix_ + "/classify", request.dump(), "application/json");
  if (!res) throw RemoteError(url + ": " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw RemoteError(url + ": HTTP " + std::to_string(res->status) + " " +
                      snippet(res->body));
  }
  std::vector<RemoteLabel> out(texts.size());
  try {
    const json body = json::parse(res->body);
    const json& labels = body.at("labels");
    if (!labels.is_array() || labels.size() != texts.size()) {
      throw RemoteError(url + ": expected " + std::to_string(texts.size()) +
                        " labels");
    }
    for (std::size_t i = 0; i < texts.size(); ++i) {
      out[i].label = labels[i].get<std::string>();
      if (!known_label(task, out[i].label)) {
        throw RemoteError(url + ": unknown " + std::string(to_string(task)) +
                          " label '" + out[i].label + "'");
      }
    }
    if (body.contains("confidences")) {
      const json& confidences = body.at("confidences");
      if (!confidences.is_array() || confidences.size() != texts.size()) {
        throw RemoteError(url + ": expected " + std::to_string(texts.size()) +
                          " confidences");
      }
      for (std::size_t i = 0; i < texts.size(); ++i) {
        const double c = confidences[i].get<double>();
        if (!(c >= 0.0 && c <= 1.0)) {
          throw RemoteError(url + ": confidence outside [0, 1]");
        }
        out[i].confidence = c;
      }
    }
  } catch (const json::exception& e) {
    throw RemoteError(url + ": malformed reply: " + e.what());
  }
  return out;
}

std::vector<RemoteLabel> HttpClassifierClient::classify(
    Task task, const std::vector<std::string>& texts) const {
  const std::size_t batch = static_cast<std::size_t>(options_.batch_size);
  const std::size_t n_batches = (texts.size() + batch - 1) / batch;
  std::vector<RemoteLabel> out(texts.size());
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t b = next++; b < n_batches; b = next++) {
      {
        std::lock_guard<std::mutex> lock(mutex);
        if (failure) return;
      }
      const std::size_t begin = b * batch;
      const std::size_t end = std::min(texts.size(), begin + batch);
      try {
        std::vector<std::string> chunk(
            texts.begin() + static_cast<std::ptrdiff_t>(begin),
            texts.begin() + static_cast<std::ptrdiff_t>(end));
        std::vector<RemoteLabel> replies = classify_batch(task, chunk);
        std::move(replies.begin(), replies.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(begin));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  const std::size_t n_threads =
      std::min(n_batches, static_cast<std::size_t>(options_.max_in_flight));
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < n_threads; ++i) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace banklens::classify
