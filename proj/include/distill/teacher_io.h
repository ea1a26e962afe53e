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

// Everything that talks to the teacher model: query generation (per-chunk
// with log-probability selection, and few-shot from clustered exemplars),
// rubric judging, and the caches that make both idempotent.

#ifndef DISTILL_TEACHER_IO_H_
#define DISTILL_TEACHER_IO_H_

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "distill/corpus.h"
#include "distill/embed_space.h"

namespace distill {

enum class QueryOrigin { kInpars, kSynthetic };

std::string_view origin_name(QueryOrigin o);

struct QueryRecord {
  std::string q_id;
  std::string text;
  std::string doc_class;
  QueryOrigin origin = QueryOrigin::kInpars;
  std::optional<std::string> source_chunk_id;  // inpars only
  std::optional<double> selection_score;       // inpars only
  int iteration = 0;
};

json query_to_json(const QueryRecord& q);
QueryRecord query_from_json(const json& j);

struct Judgment {
  std::string judge_tag;
  std::string q_id;
  std::string chunk_id;
  int score = 0;
  uint64_t seq = 0;  // logical insertion time; not persisted
};

// ---------------------------------------------------------------------------
// Wire contract.

struct GeneratedQuery {
  std::string text;
  double mean_token_logprob = 0.0;
};

// Implementations must be safe to call from several threads.
class TeacherClient {
 public:
  virtual ~TeacherClient() = default;

  // POST /v1/generate {"passage","n","template_id"}
  virtual std::vector<GeneratedQuery> generate(const std::string& passage,
                                               int n,
                                               const std::string& template_id) = 0;
  // POST /v1/generate_fewshot {"exemplars","n","template_id"}
  virtual std::vector<std::string> generate_fewshot(
      const std::vector<std::string>& exemplars, int n,
      const std::string& template_id) = 0;
  // POST /v1/judge {"query","passage","rubric_id"}; returns the raw "score"
  // value, which the caller validates.
  virtual json judge(const std::string& query, const std::string& passage,
                     const std::string& rubric_id) = 0;
};

class HttpTeacherClient : public TeacherClient {
 public:
  explicit HttpTeacherClient(std::string base_url, RetryPolicy retry = {});

  std::vector<GeneratedQuery> generate(const std::string& passage, int n,
                                       const std::string& template_id) override;
  std::vector<std::string> generate_fewshot(
      const std::vector<std::string>& exemplars, int n,
      const std::string& template_id) override;
  json judge(const std::string& query, const std::string& passage,
             const std::string& rubric_id) override;

 private:
  std::string base_url_;
  RetryPolicy retry_;
};

// ---------------------------------------------------------------------------
// Prompts. Template ids carry the document class ("inpars-vanilla:10-K") so
// a serving endpoint can render class-specific prompts.

struct Rubric {
  std::string id;
  std::string text;
};

// Four-level relevance rubric (1 = unrelated ... 4 = explicit answer).
const Rubric& default_rubric();
// True when all four score criteria are spelled out.
bool rubric_is_complete(const Rubric& r);

std::string inpars_template_id(std::string_view doc_class);
std::string fewshot_template_id(std::string_view doc_class);
// Recovers the class from a template id ("" when absent).
std::string class_of_template(std::string_view template_id);

std::string render_inpars_prompt(std::string_view doc_class,
                                 std::string_view passage);
std::string render_fewshot_prompt(std::string_view doc_class,
                                  std::span<const std::string> exemplars,
                                  int n);
std::string render_judge_prompt(const Rubric& rubric, std::string_view query,
                                std::string_view passage);

// ---------------------------------------------------------------------------
// Caches.

// (judge_tag, q_id, chunk_id) -> score. First write wins; concurrent inserts
// of the same key are safe.
class JudgmentCache {
 public:
  std::optional<int> find(const std::string& judge_tag, const std::string& q_id,
                          const std::string& chunk_id) const;
  // Returns false when the key was already present (value left unchanged).
  bool insert(const Judgment& j);
  size_t size() const;
  std::vector<Judgment> entries() const;  // sorted by key

  // JSONL {"judge_tag","q_id","chunk_id","score"}, sorted by key.
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  using Key = std::tuple<std::string, std::string, std::string>;
  mutable std::mutex mu_;
  std::map<Key, Judgment> entries_;
  uint64_t next_seq_ = 0;
};

// (template_id, chunk_id) -> generated query, so interrupted generation
// resumes without re-asking the teacher.
class GenerationCache {
 public:
  std::optional<GeneratedQuery> find(const std::string& template_id,
                                     const std::string& chunk_id) const;
  void insert(const std::string& template_id, const std::string& chunk_id,
              const GeneratedQuery& q);
  size_t size() const;
  void save(const std::filesystem::path& path) const;
  void load(const std::filesystem::path& path);

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::string, std::string>, GeneratedQuery> entries_;
};

// ---------------------------------------------------------------------------
// Judging.

struct JudgeStats {
  size_t network_calls = 0;    // teacher requests issued, re-prompts included
  size_t resolved = 0;         // pairs resolved through the teacher
  size_t cache_hits = 0;
  size_t reprompts = 0;
  size_t unjudgeable = 0;
  size_t duplicate_resolutions = 0;  // must stay 0
};

struct JudgeOptions {
  size_t max_in_flight = 8;
  // Hard cap on teacher requests through this Judge; exceeding it throws
  // Error(kBudget).
  size_t budget = 50000;
};

class Judge {
 public:
  Judge(std::shared_ptr<TeacherClient> client, JudgmentCache& cache,
        std::string judge_tag, Rubric rubric = default_rubric(),
        JudgeOptions options = {});

  const std::string& tag() const { return tag_; }

  // Cached score, or one teacher request (plus at most one re-prompt on an
  // invalid reply). Throws Error(kData, "unjudgeable pair ...").
  int judge(const QueryRecord& q, const Chunk& c);

  struct Pair {
    const QueryRecord* query;
    const Chunk* chunk;
  };
  // Judges a batch with bounded concurrency. Duplicate keys in the batch are
  // resolved once. Unjudgeable pairs come back as nullopt.
  std::vector<std::optional<int>> judge_all(std::span<const Pair> pairs);

  JudgeStats stats() const;
  void reset_budget();

 private:
  int resolve(const QueryRecord& q, const Chunk& c);
  void charge();

  std::shared_ptr<TeacherClient> client_;
  JudgmentCache& cache_;
  std::string tag_;
  Rubric rubric_;
  JudgeOptions options_;

  mutable std::mutex mu_;
  JudgeStats stats_;
  size_t spent_ = 0;
  std::set<std::tuple<std::string, std::string>> resolved_keys_;
};

// ---------------------------------------------------------------------------
// Query generation.

// Step 1: one query per sampled chunk (at most `sample_size` chunks of the
// document), each scored by the teacher's mean token log-probability.
std::vector<QueryRecord> generate_inpars_queries(
    TeacherClient& teacher, GenerationCache* cache, std::string_view doc_class,
    std::span<const Chunk> doc_chunks, size_t sample_size, uint64_t seed,
    int iteration);

// Highest selection_score first; ties by q_id.
std::vector<QueryRecord> select_top_queries(std::vector<QueryRecord> candidates,
                                            size_t k);

struct ClusterAssignment {
  std::vector<int> cluster_of;  // parallel to the input queries
  int n_clusters = 0;
  std::vector<std::string> warnings;

  std::vector<std::vector<size_t>> members() const;
};

// Seeded k-means (k-means++ init) over query embeddings.
ClusterAssignment cluster_exemplars(std::span<const QueryRecord> queries,
                                    int n_clusters, const ModelVersion& model,
                                    uint64_t seed);

struct QueryFilter {
  size_t min_length = 20;
  std::vector<std::string> interrogatives = {"what", "how",  "which",
                                             "when", "who",  "why",
                                             "does", "is",   "are"};

  // Length and question-form checks (dedup is the caller's job).
  bool accepts(std::string_view text) const;
};

struct SyntheticOptions {
  size_t target = 200;             // M
  size_t exemplars_per_prompt = 5;
  int per_call = 5;
  QueryFilter filter;
  size_t window_calls = 20;        // sliding window for the acceptance guard
  double min_acceptance = 0.05;
};

// Step 1a: few-shot generation until `target` queries survive the filters.
std::vector<QueryRecord> generate_synthetic_queries(
    TeacherClient& teacher, std::span<const QueryRecord> inpars_queries,
    const ClusterAssignment& clusters, const SyntheticOptions& options,
    uint64_t seed, int iteration);

std::string make_query_id(int iteration, std::string_view doc_class,
                          QueryOrigin origin, std::string_view suffix);

}  // namespace distill

#endif  // DISTILL_TEACHER_IO_H_
