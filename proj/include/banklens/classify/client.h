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

#ifndef BANKLENS_CLASSIFY_CLIENT_H_
#define BANKLENS_CLASSIFY_CLIENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace banklens::classify {

enum class Task { kRelevance, kAspect };

std::string_view to_string(Task task);

struct RemoteLabel {
  std::string label;
  std::optional<double> confidence;
};

class ClassifierClient {
 public:
  virtual ~ClassifierClient() = default;
  // One reply per text, in order. Labels are already checked against the
  // task's closed label set.
  virtual std::vector<RemoteLabel> classify(
      Task task, const std::vector<std::string>& texts) const = 0;
};

struct ClassifierOptions {
  std::string endpoint;  // scheme://host:port, optionally with a path prefix
  int batch_size = 16;
  int max_in_flight = 4;
  int timeout_seconds = 30;
};

// POST /classify {"task","texts"} -> {"labels","confidences"?}. Batches run
// concurrently, at most max_in_flight at a time. Any transport or protocol
// failure, including an unknown label, is a RemoteError.
class HttpClassifierClient : public ClassifierClient {
 public:
  explicit HttpClassifierClient(ClassifierOptions options);

  std::vector<RemoteLabel> classify(
      Task task, const std::vector<std::string>& texts) const override;

  const ClassifierOptions& options() const { return options_; }

 private:
  std::vector<RemoteLabel> classify_batch(
      Task task, const std::vector<std::string>& texts) const;

  ClassifierOptions options_;
  std::string scheme_host_;
  std::string prefix_;
};

}  // namespace banklens::classify

#endif  // BANKLENS_CLASSIFY_CLIENT_H_
