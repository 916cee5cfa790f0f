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

#include "banklens/classify/linear.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "banklens/core/error.h"
#include "banklens/embed/similarity.h"

namespace banklens::classify {
namespace {

void check_dims(const LinearModel& model, const EmbeddingVector& v) {
  if (static_cast<int>(v.dims()) != model.dims()) {
    throw ArgumentError("vector has " + std::to_string(v.dims()) +
                        " dims, model expects " + std::to_string(model.dims()));
  }
}

std::vector<double> logits(const LinearModel& model, const EmbeddingVector& v) {
  std::vector<double> z(model.bias());
  for (int c = 0; c < model.n_classes(); ++c) {
    const auto& row = model.weights()[static_cast<std::size_t>(c)];
    for (std::size_t j = 0; j < row.size(); ++j) z[static_cast<std::size_t>(c)] += row[j] * v[j];
  }
  return z;
}

void check_examples(const std::vector<Example>& examples, int n_classes, int dims) {
  for (const Example& e : examples) {
    if (e.label < 0 || e.label >= n_classes) {
      throw ArgumentError("label " + std::to_string(e.label) + " out of range");
    }
    if (static_cast<int>(e.features.dims()) != dims) {
      throw ArgumentError("examples have inconsistent dims");
    }
  }
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ArgumentError("learning_rate must be > 0");
  if (epochs < 1) throw ArgumentError("epochs must be >= 1");
  if (!(l2 >= 0.0)) throw ArgumentError("l2 must be >= 0");
  if (!(tolerance >= 0.0)) throw ArgumentError("tolerance must be >= 0");
}

LinearModel::LinearModel(Matrix weights, std::vector<double> bias,
                         std::vector<std::string> class_names,
                         std::string provider_id, double final_loss)
    : weights_(std::move(weights)),
      bias_(std::move(bias)),
      class_names_(std::move(class_names)),
      provider_id_(std::move(provider_id)),
      final_loss_(final_loss) {
  if (class_names_.empty() || weights_.size() != class_names_.size() ||
      bias_.size() != class_names_.size()) {
    throw ValidationError("weight rows, bias and class names must agree in count");
  }
  const std::size_t dims = weights_.front().size();
  if (dims == 0) throw ValidationError("model needs at least one dimension");
  for (const auto& row : weights_) {
    if (row.size() != dims) throw ValidationError("ragged weight matrix");
    for (double w : row) {
      if (!std::isfinite(w)) throw ValidationError("non-finite weight");
    }
  }
  for (double b : bias_) {
    if (!std::isfinite(b)) throw ValidationError("non-finite bias");
  }
}

LinearModel LinearModel::zeros(std::vector<std::string> class_names, int dims,
                               std::string provider_id) {
  const std::size_t n = class_names.size();
  return LinearModel(Matrix(n, std::vector<double>(static_cast<std::size_t>(dims), 0.0)),
                     std::vector<double>(n, 0.0), std::move(class_names),
                     std::move(provider_id));
}

std::string LinearModel::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["classes"] = class_names_;
  j["dims"] = dims();
  j["provider_id"] = provider_id_;
  j["weights"] = weights_;
  j["bias"] = bias_;
  return j.dump();
}

LinearModel LinearModel::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) {
      throw ParseError("unsupported model version " + j.at("version").dump());
    }
    LinearModel model(j.at("weights").get<Matrix>(),
                      j.at("bias").get<std::vector<double>>(),
                      j.at("classes").get<std::vector<std::string>>(),
                      j.at("provider_id").get<std::string>());
    if (model.dims() != j.at("dims").get<int>()) {
      throw ParseError("dims field disagrees with the weights");
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  } catch (const ValidationError& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
}

void LinearModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << to_json() << '\n';
  if (!out) throw IoError("cannot write " + path.string());
}

LinearModel LinearModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

std::vector<double> softmax(const std::vector<double>& z) {
  const double top = *std::max_element(z.begin(), z.end());
  std::vector<double> p(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    p[i] = std::exp(z[i] - top);
    sum += p[i];
  }
  for (double& x : p) x /= sum;
  return p;
}

Prediction predict(const LinearModel& model, const EmbeddingVector& v) {
  check_dims(model, v);
  Prediction out;
  out.probabilities = softmax(logits(model, v));
  out.label = static_cast<int>(
      std::max_element(out.probabilities.begin(), out.probabilities.end()) -
      out.probabilities.begin());
  return out;
}

LossAndGradient loss_and_gradient(const LinearModel& model,
                                  const std::vector<Example>& examples,
                                  double l2) {
  if (examples.empty()) throw ArgumentError("no examples");
  check_examples(examples, model.n_classes(), model.dims());
  const std::size_t k = static_cast<std::size_t>(model.n_classes());
  const std::size_t d = static_cast<std::size_t>(model.dims());
  const double inv_n = 1.0 / static_cast<double>(examples.size());
  LossAndGradient out;
  out.grad_weights.assign(k, std::vector<double>(d, 0.0));
  out.grad_bias.assign(k, 0.0);
  for (const Example& e : examples) {
    const std::vector<double> z = logits(model, e.features);
    const double top = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double x : z) sum += std::exp(x - top);
    const double log_sum = top + std::log(sum);
    out.loss -= (z[static_cast<std::size_t>(e.label)] - log_sum) * inv_n;
    for (std::size_t c = 0; c < k; ++c) {
      const double residual =
          std::exp(z[c] - log_sum) - (static_cast<int>(c) == e.label ? 1.0 : 0.0);
      out.grad_bias[c] += residual * inv_n;
      for (std::size_t j = 0; j < d; ++j) {
        out.grad_weights[c][j] += residual * e.features[j] * inv_n;
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t j = 0; j < d; ++j) {
      const double w = model.weights()[c][j];
      out.loss += l2 * w * w;
      out.grad_weights[c][j] += 2.0 * l2 * w;
    }
  }
  return out;
}

LinearModel train(const std::vector<Example>& examples,
                  std::vector<std::string> class_names, std::string provider_id,
                  const TrainConfig& config, std::vector<double>* loss_history) {
  config.validate();
  const int k = static_cast<int>(class_names.size());
  if (k < 2) throw ArgumentError("training needs at least two classes");
  if (examples.empty()) throw ArgumentError("no training examples");
  const int dims = static_cast<int>(examples.front().features.dims());
  check_examples(examples, k, dims);
  std::vector<int> per_class(static_cast<std::size_t>(k), 0);
  for (const Example& e : examples) ++per_class[static_cast<std::size_t>(e.label)];
  for (int c = 0; c < k; ++c) {
    if (per_class[static_cast<std::size_t>(c)] == 0) {
      throw ArgumentError("class '" + class_names[static_cast<std::size_t>(c)] +
                          "' has no examples");
    }
  }

  Matrix w(static_cast<std::size_t>(k), std::vector<double>(static_cast<std::size_t>(dims), 0.0));
  std::vector<double> b(static_cast<std::size_t>(k), 0.0);
  LinearModel model(w, b, class_names, provider_id);
  LossAndGradient state = loss_and_gradient(model, examples, config.l2);
  if (loss_history) loss_history->assign(1, state.loss);
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (std::size_t c = 0; c < w.size(); ++c) {
      b[c] -= config.learning_rate * state.grad_bias[c];
      for (std::size_t j = 0; j < w[c].size(); ++j) {
        w[c][j] -= config.learning_rate * state.grad_weights[c][j];
      }
    }
    const double previous = state.loss;
    try {
      model = LinearModel(w, b, class_names, provider_id);
    } catch (const ValidationError&) {
      throw DivergenceError("parameters became non-finite at epoch " +
                                std::to_string(epoch),
                            epoch);
    }
    state = loss_and_gradient(model, examples, config.l2);
    if (!std::isfinite(state.loss)) {
      throw DivergenceError("loss became non-finite at epoch " + std::to_string(epoch),
                            epoch);
    }
    if (loss_history) loss_history->push_back(state.loss);
    if (std::abs(previous - state.loss) < config.tolerance) break;
  }
  return LinearModel(std::move(w), std::move(b), std::move(class_names),
                     std::move(provider_id), state.loss);
}

double gradient_check(const LinearModel& model,
                      const std::vector<Example>& examples, double l2,
                      double epsilon) {
  if (examples.empty()) throw ArgumentError("gradient check needs examples");
  if (!(epsilon > 0.0 && epsilon <= 1e-2)) {
    throw ArgumentError("epsilon must lie in (0, 1e-2]");
  }
  const LossAndGradient analytic = loss_and_gradient(model, examples, l2);
  auto relative = [](double a, double n) {
    return std::abs(a - n) / std::max({std::abs(a), std::abs(n), 1e-8});
  };
  auto loss_at = [&](Matrix w, std::vector<double> b) {
    return loss_and_gradient(LinearModel(std::move(w), std::move(b),
                                         model.class_names(), model.provider_id()),
                             examples, l2)
        .loss;
  };
  double worst = 0.0;
  for (std::size_t c = 0; c < model.weights().size(); ++c) {
    for (std::size_t j = 0; j < model.weights()[c].size(); ++j) {
      Matrix plus = model.weights();
      Matrix minus = model.weights();
      plus[c][j] += epsilon;
      minus[c][j] -= epsilon;
      const double numeric =
          (loss_at(plus, model.bias()) - loss_at(minus, model.bias())) / (2 * epsilon);
      worst = std::max(worst, relative(analytic.grad_weights[c][j], numeric));
    }
    std::vector<double> plus = model.bias();
    std::vector<double> minus = model.bias();
    plus[c] += epsilon;
    minus[c] -= epsilon;
    const double numeric =
        (loss_at(model.weights(), plus) - loss_at(model.weights(), minus)) / (2 * epsilon);
    worst = std::max(worst, relative(analytic.grad_bias[c], numeric));
  }
  return worst;
}

int centroid_classify(const EmbeddingVector& v,
                      const std::vector<EmbeddingVector>& centroids) {
  if (centroids.empty()) throw ArgumentError("no centroids");
  int best = 0;
  double best_sim = embed::cosine(v, centroids.front());
  for (std::size_t i = 1; i < centroids.size(); ++i) {
    const double sim = embed::cosine(v, centroids[i]);
    if (sim > best_sim) {
      best_sim = sim;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::vector<EmbeddingVector> class_centroids(const std::vector<Example>& examples,
                                             int n_classes) {
  if (examples.empty()) throw ArgumentError("no examples");
  const std::size_t dims = examples.front().features.dims();
  check_examples(examples, n_classes, static_cast<int>(dims));
  Matrix sums(static_cast<std::size_t>(n_classes), std::vector<double>(dims, 0.0));
  std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
  for (const Example& e : examples) {
    auto& row = sums[static_cast<std::size_t>(e.label)];
    for (std::size_t j = 0; j < dims; ++j) row[j] += e.features[j];
    ++counts[static_cast<std::size_t>(e.label)];
  }
  std::vector<EmbeddingVector> out;
  for (std::size_t c = 0; c < sums.size(); ++c) {
    if (counts[c] == 0) {
      throw ArgumentError("class " + std::to_string(c) + " has no examples");
    }
    for (double& x : sums[c]) x /= counts[c];
    out.emplace_back(std::move(sums[c]));
  }
  return out;
}

}  // namespace banklens::classify
