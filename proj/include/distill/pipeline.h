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

// Iteration driver. Every stage reads its inputs from and writes its outputs
// to the run directory, so each one can also be invoked on its own:
//
//   <run>/corpus/{docs,chunks,folds}.jsonl, splits.json
//   <run>/models/bi-enc-<i>.ckpt
//   <run>/cache/{judgments,generations}.jsonl
//   <run>/iter<i>/sample.jsonl
//   <run>/iter<i>/queries/<class>.jsonl
//   <run>/iter<i>/judgments/<class>.jsonl, units/<class>.jsonl
//   <run>/iter<i>/triples/<class>.jsonl
//   <run>/iter<i>/model/bi-enc-<i+1>.ckpt
//   <run>/iter<i>/metrics/{training_report,validation}.json
//   <run>/iter<i>/manifest.json
//   <run>/final/queries/<class>.jsonl, report.json, report.txt

#ifndef DISTILL_PIPELINE_H_
#define DISTILL_PIPELINE_H_

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "distill/corpus.h"
#include "distill/distill_train.h"
#include "distill/embed_space.h"
#include "distill/evaluation.h"
#include "distill/mining.h"
#include "distill/retrieval.h"
#include "distill/synthetic_world.h"
#include "distill/teacher_io.h"

namespace distill {

struct EndpointConfig {
  std::string kind = "oracle";  // "oracle" (needs a synthetic world) or "http"
  std::string url;
};

struct EmbedderConfig {
  uint32_t hash_dim = 1u << 15;
  uint32_t out_dim = 64;
  uint64_t seed = 0;
  std::string baseline_checkpoint;  // optional; overrides the seeded init
};

struct QueryConfig {
  size_t inpars_chunks_per_doc = 500;
  size_t inpars_docs_per_class = 0;  // 0: every sampled document
  size_t inpars_keep = 200;          // M, InPars queries kept per class
  size_t synthetic = 200;            // M, few-shot queries per class
  int n_clusters = 10;
  size_t exemplars_per_prompt = 5;
  int per_call = 5;
  size_t min_length = 20;
};

struct PipelineConfig {
  std::filesystem::path run_dir = "runs/default";
  std::filesystem::path documents;   // JSONL corpus, unless `world` is set
  std::optional<WorldSpec> world;    // synthetic corpus with oracle teacher
  size_t chunk_min = 500;
  size_t chunk_max = 1000;
  std::string test_start = "2024-07-01";
  double val_fraction = 0.30;
  size_t sample_target_chunks = 1000000;
  std::vector<std::string> classes;  // empty: every class in the corpus
  EndpointConfig teacher;
  EndpointConfig final_judge;
  std::string train_judge_tag = "teacher";
  EmbedderConfig embedder;
  QueryConfig queries;
  SamplingParams sampling;
  TrainerConfig trainer;
  double stability_ratio = 3.0;
  EvalConfig eval;
  size_t test_queries_per_class = 200;
  size_t test_inpars_chunks_per_doc = 500;
  int iterations = 1;  // N
  size_t judge_budget = 50000;  // teacher calls per stage
  size_t max_in_flight = 8;
  uint64_t seed = 0;

  void validate() const;
  json to_json() const;
  // Relative paths resolve against `base_dir`.
  static PipelineConfig from_json(const json& j,
                                  const std::filesystem::path& base_dir = {});
  static PipelineConfig load(const std::filesystem::path& path);
};

// Stage bookkeeping for one iteration (or for the corpus / final stages).
class Manifest {
 public:
  Manifest() = default;
  Manifest(std::filesystem::path path, std::filesystem::path root);

  // Complete and every recorded artifact still hashes to its digest.
  bool is_complete(const std::string& stage) const;
  void mark_complete(const std::string& stage,
                     const std::vector<std::filesystem::path>& artifacts);
  void set(const std::string& key, const json& value);
  const json& data() const { return data_; }
  void save() const;

 private:
  std::filesystem::path path_;
  std::filesystem::path root_;
  json data_ = json::object();
};

struct Corpus {
  std::vector<Document> docs;
  std::vector<Chunk> chunks;  // grouped by document, in span order
  FoldAssignment folds;
  DocCatalog catalog;
  std::vector<std::string> classes;
  std::unordered_map<std::string, const Chunk*> chunk_by_id;
  std::unordered_map<std::string, std::string> doc_of_chunk;
  std::map<std::string, std::pair<size_t, size_t>> doc_range;  // [lo, hi)
  std::map<std::string, const Document*> doc_by_id;

  std::span<const Chunk> chunks_of(const std::string& doc_id) const;
  std::vector<Chunk> chunks_of_docs(const std::vector<std::string>& ids) const;
};

// Requests that reached the teacher endpoints.
struct TeacherTraffic {
  size_t generate = 0;
  size_t fewshot = 0;
  size_t judge = 0;        // training judge
  size_t final_judge = 0;  // final-evaluation judge
};

struct FinalReport {
  json data;
  std::string text;
};

class Pipeline {
 public:
  // Teachers default to what the config names; tests may inject their own.
  explicit Pipeline(PipelineConfig config,
                    std::shared_ptr<TeacherClient> teacher = nullptr,
                    std::shared_ptr<TeacherClient> final_judge = nullptr);

  const PipelineConfig& config() const { return config_; }
  std::filesystem::path path(const std::filesystem::path& rel) const;

  // Corpus stages: ingest (or synthesize), chunk, folds, baseline model.
  void ingest();
  void chunk();
  void folds();
  void prepare();  // the three above plus bi-enc(0)

  // Iteration stages. `only_class` limits per-class stages to one class.
  void sample(int i);
  void queries(int i, const std::optional<std::string>& only_class = {});
  void judge(int i, const std::optional<std::string>& only_class = {});
  void mine(int i, const std::optional<std::string>& only_class = {});
  void train(int i);
  void validate(int i);
  Manifest run_iteration(int i);

  FinalReport final_evaluation();
  // prepare + every iteration + final evaluation.
  FinalReport run();

  // Loaded lazily from the run directory.
  const Corpus& corpus();
  ModelVersion model(int i);

  TeacherTraffic traffic() const;
  // Judge statistics so far, by judge tag.
  const std::map<std::string, JudgeStats>& judge_stats() const {
    return judge_stats_;
  }

  static std::string class_file(const std::string& doc_class);

 private:
  std::vector<std::string> active_classes(
      const std::optional<std::string>& only_class);
  Manifest manifest(int i) const;
  Manifest corpus_manifest() const;
  std::vector<QueryRecord> load_queries(int i, const std::string& cls) const;
  std::vector<std::string> load_sample(int i) const;
  const ChunkIndex& sample_index(int i, int model_i);
  const ChunkIndex& test_index(int model_i);
  JudgmentCache& cache();
  GenerationCache& generation_cache();
  void save_caches();
  std::shared_ptr<TeacherClient> teacher_ptr();
  std::shared_ptr<TeacherClient> final_judge_ptr();
  JudgeOptions judge_options() const;
  void record(const Judge& j);

  PipelineConfig config_;
  std::shared_ptr<TeacherClient> teacher_in_;
  std::shared_ptr<TeacherClient> final_judge_in_;
  std::shared_ptr<TeacherClient> teacher_;      // counting wrappers
  std::shared_ptr<TeacherClient> final_judge_;
  std::shared_ptr<const World> world_;
  std::optional<Corpus> corpus_;
  std::map<int, ModelVersion> models_;
  std::map<std::pair<int, int>, ChunkIndex> sample_indexes_;
  std::map<int, ChunkIndex> test_indexes_;
  std::unique_ptr<JudgmentCache> cache_;
  std::unique_ptr<GenerationCache> generations_;
  std::map<std::string, JudgeStats> judge_stats_;
};

std::string render_report_text(const json& report);

}  // namespace distill

#endif  // DISTILL_PIPELINE_H_
