// Copyright 2026 The filing-distill Authors
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

// Triplet-loss retraining of the reference embedder.

#ifndef DISTILL_DISTILL_TRAIN_H_
#define DISTILL_DISTILL_TRAIN_H_

#include <span>
#include <string>
#include <vector>

#include "distill/embed_space.h"
#include "distill/mining.h"

namespace distill {

struct TrainerConfig {
  double margin = 0.1;
  int epochs = 2;
  size_t batch_size = 32;
  double learning_rate = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double weight_decay = 0.01;
  uint64_t seed = 0;

  // Hyperparameters used for the large transformer student.
  static TrainerConfig production_preset();

  void validate() const;
  json to_json() const;
  static TrainerConfig from_json(const json& j);
};

struct TextTriple {
  std::string query;
  std::string pos;
  std::string neg;
};

std::vector<TextTriple> resolve_texts(std::span<const Triple> triples,
                                      const TextStore& texts);

// max(0, margin + d(q, p) - d(q, n)).
double triplet_loss(const Vector& q, const Vector& p, const Vector& n,
                    double margin);

// Gradient of the triplet loss with respect to W, restricted to the columns
// touched by the three texts. Everything is computed in double precision.
struct SparseGradient {
  double loss = 0.0;
  uint32_t out_dim = 0;
  std::vector<uint32_t> columns;  // ascending feature indices
  std::vector<double> values;     // columns.size() * out_dim, column-major

  std::span<const double> column(size_t i) const {
    return {values.data() + i * out_dim, out_dim};
  }
};

SparseGradient loss_gradient(const ReferenceParams& params,
                             const TextTriple& triple, double margin);

struct AccuracyResult {
  double accuracy = 1.0;
  bool empty = false;  // accuracy defined as 1 for an empty list
};

// Fraction of triples with d(q, pos) < d(q, neg), strictly.
AccuracyResult triples_accuracy(const ModelVersion& model,
                                std::span<const TextTriple> triples);

struct TrainingReport {
  std::string tag_in;
  std::string tag_out;
  size_t train_triples = 0;
  size_t val_triples = 0;
  size_t steps = 0;
  AccuracyResult val_accuracy_before;
  AccuracyResult val_accuracy_after;
  std::vector<double> epoch_loss;  // mean loss per epoch
  std::vector<double> batch_loss;  // mean loss per step

  json to_json() const;
};

struct TrainResult {
  ModelVersion model;
  TrainingReport report;
};

// Mini-batch AdamW with a seeded shuffle per epoch. The input model is left
// untouched; an empty training list returns its parameters unchanged.
// Throws Error(kData) when the loss turns non-finite.
TrainResult train(const ModelVersion& model, std::span<const TextTriple> train,
                  std::span<const TextTriple> val, const TrainerConfig& config,
                  const std::string& out_tag);

}  // namespace distill

#endif  // DISTILL_DISTILL_TRAIN_H_
