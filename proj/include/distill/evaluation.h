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

// Held-out evaluation: union retrieval over model versions, document scoring
// and selection, the adaptive judging loop with its stopping rule, validation
// metrics, evidence-span labels and rank-change analyses.

#ifndef DISTILL_EVALUATION_H_
#define DISTILL_EVALUATION_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "distill/corpus.h"
#include "distill/ir_metrics.h"
#include "distill/retrieval.h"
#include "distill/teacher_io.h"

namespace distill {

struct EvalConfig {
  size_t K = 100;
  size_t k = 5;
  size_t P = 4;
  double S = 0.5;
  double mu = 3.0;
  double rel_se = 0.05;
  std::string judge_tag = "final-judge";
  size_t min_units = 2;
  uint64_t seed = 0;

  void validate() const;
  json to_json() const;
  static EvalConfig from_json(const json& j);
};

// C_test(q, K) and D_test(q, K), both sorted.
struct UnionRetrieval {
  std::vector<std::string> chunk_ids;
  std::vector<std::string> doc_ids;
};

// Union of the per-model top-K lists. Every index must cover the same chunks.
UnionRetrieval union_test_retrieval(std::span<const ChunkIndex* const> indexes,
                                    std::string_view query, size_t K,
                                    const RetrievalFilter& filter = {});

// max(mean_a min_b d(a, b), mean_b min_a d(a, b)). Throws on an empty set.
double modified_hausdorff(std::span<const Vector> a, std::span<const Vector> b);

// relu(S - min_j d(q, top-1 chunk of doc under model j)), j over both indexes.
double similarity_factor(const ChunkIndex& base, const ChunkIndex& exp,
                         std::string_view query, const std::string& doc_id,
                         double S);

struct DocScore {
  std::string doc_id;
  double hausdorff_factor = 0.0;
  double similarity_factor = 0.0;
  double combined = 0.0;
};

// Raw factors for each document: the Hausdorff distance between the doc's
// top-k sets under the two models (vectors taken from `base`), and the
// similarity factor.
std::vector<DocScore> score_docs(const ChunkIndex& base, const ChunkIndex& exp,
                                 std::string_view query,
                                 std::span<const std::string> doc_ids,
                                 const EvalConfig& config);

// Fills `combined` with the product of the min-max-normalized factors and
// keeps the best ceil(|D| / P) documents (ties by doc_id). A factor whose
// values are all equal normalizes to 1 when positive and 0 otherwise.
std::vector<DocScore> score_and_select_docs(std::vector<DocScore> scores,
                                            size_t P);

struct EvalUnit {
  const QueryRecord* query = nullptr;
  std::string doc_id;
};

struct PairedReport {
  MetricReport base_mrr, exp_mrr, base_dcg, exp_dcg;
  std::string base_tag, exp_tag, judge_tag;
  size_t units = 0;          // evaluated (q, d) units
  size_t pool = 0;           // units available
  size_t judged_pairs = 0;   // distinct (q, c) pairs with a judgment
  size_t missing_pairs = 0;  // pairs the judge could not score
  size_t skipped_units = 0;  // units dropped because of missing judgments
  bool converged = false;
  std::vector<std::pair<std::string, std::string>> sampled;  // (q_id, doc_id)

  json to_json() const;
};

// Draws units without replacement (seeded), judges the within-document
// top-k of both models, and stops once every tracked mean has a standard
// error below rel_se of itself, or the pool runs out ("not converged").
PairedReport adaptive_evaluate(
    std::span<const EvalUnit> pool, const ChunkIndex& base,
    const ChunkIndex& exp, Judge& judge,
    const std::unordered_map<std::string, const Chunk*>& chunks,
    const EvalConfig& config);

struct ValidationReport {
  PairedReport metrics;
  size_t required_pairs = 0;
  double coverage = 1.0;

  json to_json() const;
};

// Metrics@k for both models over validation units, read from the judgment
// cache only. Units with an unjudged pair are counted, never imputed.
ValidationReport validation_metrics(
    std::span<const EvalUnit> units, const ChunkIndex& base,
    const ChunkIndex& exp, const JudgmentCache& cache,
    const std::string& judge_tag, size_t k);

struct EvidencePassage {
  std::string doc_id;
  size_t start = 0;
  size_t end = 0;
  std::string q_id;
};

EvidencePassage evidence_from_json(const json& j);
std::vector<EvidencePassage> load_evidence(const std::filesystem::path& path);

// 1 when some passage of the same document overlaps the chunk by more than
// a third of the shorter of the two spans.
std::vector<int> propagate_evidence_labels(
    std::span<const Chunk> chunks, std::span<const EvidencePassage> evidence);

// Chunks judged 4 that rank first under the new model and below rank 5
// under the old one.
std::vector<std::string> promoted_filings(
    const ChunkIndex& old_index, const ChunkIndex& new_index,
    std::string_view query, const std::string& q_id, const std::string& doc_id,
    const JudgmentCache& cache, const std::string& judge_tag);

struct RankedChunk {
  std::string chunk_id;
  int rank_old = 0;
  int rank_new = 0;
  int relevance = 0;

  int delta() const { return rank_old - rank_new; }
};

struct DeltaLists {
  std::vector<RankedChunk> most_promoted;  // delta descending
  std::vector<RankedChunk> most_demoted;   // delta ascending
};

// Relevant chunks (relevance 4) sorted by rank change; promoted when the
// change exceeds mu, demoted when it falls below -mu.
DeltaLists rank_delta_lists(std::span<const RankedChunk> chunks, double mu,
                            size_t head = 50);

struct DifferenceVector {
  std::string q_id;
  std::string pos;
  std::string neg;
  std::vector<double> vector;
  bool seed_member = false;
  std::optional<std::pair<double, double>> pca;

  json to_json() const;
};

// S(q): vec(pos) - vec(neg) for every judged positive (4) and negative (< 3)
// of the query. seed_member marks S_seed(q), the subset whose positive is the
// query's source chunk.
std::vector<DifferenceVector> difference_vector_sets(
    const QueryRecord& q, std::span<const Judgment> judgments,
    const ChunkIndex& index);

// Top-2 principal coordinates of the centered vectors.
void attach_pca(std::vector<DifferenceVector>& vectors);

}  // namespace distill

#endif  // DISTILL_EVALUATION_H_
