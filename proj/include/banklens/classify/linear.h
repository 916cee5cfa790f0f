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

#ifndef BANKLENS_CLASSIFY_LINEAR_H_
#define BANKLENS_CLASSIFY_LINEAR_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "banklens/core/types.h"

namespace banklens::classify {

using Matrix = std::vector<std::vector<double>>;

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 300;
  double l2 = 1e-4;
  std::uint64_t seed = 42;
  double tolerance = 1e-6;

  // Throws ArgumentError.
  void validate() const;
};

struct Example {
  EmbeddingVector features;
  int label = 0;
};

// Softmax regression head: logits = W v + b.
class LinearModel {
 public:
  // Throws ValidationError when shapes disagree or a parameter is not finite.
  LinearModel(Matrix weights, std::vector<double> bias,
              std::vector<std::string> class_names, std::string provider_id,
              double final_loss = 0.0);

  static LinearModel zeros(std::vector<std::string> class_names, int dims,
                           std::string provider_id);

  const Matrix& weights() const { return weights_; }
  const std::vector<double>& bias() const { return bias_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::string& provider_id() const { return provider_id_; }
  int n_classes() const { return static_cast<int>(class_names_.size()); }
  int dims() const { return static_cast<int>(weights_.front().size()); }
  double final_loss() const { return final_loss_; }

  // {"version":1,"classes":[...],"dims":...,"provider_id":...,
  //  "weights":[[...]],"bias":[...]}
  std::string to_json() const;
  // Throws ParseError.
  static LinearModel from_json(const std::string& text);
  void save(const std::filesystem::path& path) const;
  static LinearModel load(const std::filesystem::path& path);

 private:
  Matrix weights_;
  std::vector<double> bias_;
  std::vector<std::string> class_names_;
  std::string provider_id_;
  double final_loss_;
};

struct Prediction {
  int label = 0;
  std::vector<double> probabilities;
};

// Softmax over the logits; ties go to the lowest index. Throws ArgumentError
// on a dims mismatch.
Prediction predict(const LinearModel& model, const EmbeddingVector& v);

std::vector<double> softmax(const std::vector<double>& logits);

// Mean cross-entropy plus l2 * |W|^2 (the bias is not penalized).
struct LossAndGradient {
  double loss = 0.0;
  Matrix grad_weights;
  std::vector<double> grad_bias;
};
LossAndGradient loss_and_gradient(const LinearModel& model,
                                  const std::vector<Example>& examples,
                                  double l2);

// Full-batch gradient descent from zeros. Stops early once the loss moves by
// less than the tolerance. `loss_history`, when given, receives the loss
// before the first step and after every step. Throws ArgumentError for a
// class without examples or inconsistent dims, DivergenceError when the loss
// stops being finite.
LinearModel train(const std::vector<Example>& examples,
                  std::vector<std::string> class_names, std::string provider_id,
                  const TrainConfig& config = {},
                  std::vector<double>* loss_history = nullptr);

// Largest |analytic - numeric| / max(|analytic|, |numeric|, 1e-8) over all
// parameters, numeric by central differences. Throws ArgumentError for no
// examples or epsilon outside (0, 1e-2].
double gradient_check(const LinearModel& model,
                      const std::vector<Example>& examples, double l2,
                      double epsilon = 1e-5);

// Index of the centroid with the highest cosine; ties go to the lowest
// index. Throws ArgumentError when `centroids` is empty.
int centroid_classify(const EmbeddingVector& v,
                      const std::vector<EmbeddingVector>& centroids);

// Per-class mean of the examples. Throws ArgumentError for an empty class.
std::vector<EmbeddingVector> class_centroids(const std::vector<Example>& examples,
                                             int n_classes);

}  // namespace banklens::classify

#endif  // BANKLENS_CLASSIFY_LINEAR_H_
