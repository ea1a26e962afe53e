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

// Binary-relevance ranking metrics and the statistics used to compare two
// retrievers on the same evaluation units.

#ifndef DISTILL_IR_METRICS_H_
#define DISTILL_IR_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distill/common.h"

namespace distill {

// Rank 1 first. Every entry is 0 or 1.
using RankedLabels = std::vector<int>;

int binarize(int score, int threshold = 4);

double mrr_at_k(std::span<const int> labels, size_t k);
double dcg_at_k(std::span<const int> labels, size_t k);

struct NdcgResult {
  double value = 0.0;
  bool no_relevant = false;  // defined as 0 in that case
};
// DCG of the whole list over the DCG of its ideal reordering.
NdcgResult ndcg_overall(std::span<const int> labels);

enum class EffectSize { kPaired, kPooled };

// Paired d_z: mean(exp - base) / sd(exp - base). The pooled variant divides
// mean(exp) - mean(base) by the root mean of the two sample variances.
double cohens_d(std::span<const double> base, std::span<const double> exp,
                EffectSize kind = EffectSize::kPaired);

inline double cohens_d_paired(std::span<const double> base,
                              std::span<const double> exp) {
  return cohens_d(base, exp, EffectSize::kPaired);
}

double mean_of(std::span<const double> values);
double sample_stddev(std::span<const double> values);

struct StopDecision {
  double mean = 0.0;
  double se = 0.0;
  bool stop = false;
  bool ratio_undefined = false;
};

// se = sd / sqrt(n); stop iff se < rel_threshold * mean (mean must be > 0).
StopDecision stderr_and_stop(std::span<const double> values,
                             double rel_threshold = 0.05);

struct MetricReport {
  std::string metric;
  size_t k = 0;  // 0 for overall metrics
  std::vector<double> per_unit;
  double mean = 0.0;
  double se = 0.0;
  size_t n = 0;
  std::optional<double> cohens_d;

  static MetricReport from_values(std::string metric, size_t k,
                                  std::vector<double> per_unit);
  // Attaches the paired effect size of this report against `base`; the two
  // must cover the same units in the same order.
  void compare_against(const MetricReport& base);
  json to_json() const;
};

}  // namespace distill

#endif  // DISTILL_IR_METRICS_H_
