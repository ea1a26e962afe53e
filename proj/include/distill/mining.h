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

// Judgment-set sampling and contrastive triple extraction.

#ifndef DISTILL_MINING_H_
#define DISTILL_MINING_H_

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "distill/corpus.h"
#include "distill/retrieval.h"
#include "distill/teacher_io.h"

namespace distill {

struct SamplingParams {
  size_t k = 5;          // within-document depth
  size_t K = 100;        // corpus-wide depth
  double omega = 0.05;   // rank-decay constant
  uint64_t seed = 0;

  void validate() const;
};

// Unnormalized weights exp(-omega * (r - (k + 1))) for the residual ranks
// r = k+1 .. n (index 0 is rank k+1).
std::vector<double> residual_rank_weights(size_t k, size_t n, double omega);

// Draws `count` distinct positions from `weights` sequentially, each draw
// proportional to the weights still in play. Returned in draw order.
std::vector<size_t> draw_without_replacement(std::span<const double> weights,
                                             size_t count, Rng& rng);

// C_d(q, i): the within-document top-k plus 2k residual chunks drawn with
// rank-decaying weights. Documents with at most 3k chunks are returned whole.
// The draw is seeded from (params.seed, q_id, doc_id). Ordered by rank.
std::vector<RetrievalResult> sample_judgment_set(const ChunkIndex& index,
                                                 const Vector& q,
                                                 const std::string& q_id,
                                                 const std::string& doc_id,
                                                 const SamplingParams& params);

struct Triple {
  std::string q_id;
  std::string pos;
  std::string neg;
  std::string doc_id;
  int iteration = 0;
  Fold fold = Fold::kTrain;

  auto key() const { return std::tie(q_id, doc_id, pos, neg); }
  bool operator==(const Triple& o) const { return key() == o.key(); }
  bool operator<(const Triple& o) const { return key() < o.key(); }
};

json triple_to_json(const Triple& t);
Triple triple_from_json(const json& j);

struct TripleSplit {
  std::vector<Triple> train;
  std::vector<Triple> val;
};

// All same-document (pos, neg) pairs per query with r(pos) = 4 and
// r(neg) <= 2. Test-fold documents never contribute. Output is deduplicated
// and sorted by (q_id, doc_id, pos, neg).
TripleSplit extract_triples(std::span<const Judgment> judgments,
                            const std::unordered_map<std::string, std::string>&
                                doc_of_chunk,
                            const std::map<std::string, Fold>& fold_of_doc,
                            int iteration);

// Query and chunk texts, for anything that has to embed triples.
struct TextStore {
  std::unordered_map<std::string, std::string> queries;
  std::unordered_map<std::string, std::string> chunks;

  const std::string& query(const std::string& q_id) const;
  const std::string& chunk(const std::string& chunk_id) const;
};

struct StabilityResult {
  std::vector<Triple> triples;
  size_t violated = 0;
  size_t satisfied_added = 0;
  std::vector<std::string> warnings;
};

// Ratio 0 returns the candidates unchanged. Otherwise keeps every triple the
// model violates (triplet loss > 0 at `margin`) and adds
// round(ratio * violated) triples it already satisfies, sampled from the
// candidates with a seeded draw.
StabilityResult add_stability_triples(const ModelVersion& model,
                                      std::span<const Triple> candidates,
                                      const TextStore& texts, double ratio,
                                      double margin, uint64_t seed);

}  // namespace distill

#endif  // DISTILL_MINING_H_
