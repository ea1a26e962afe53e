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

#ifndef DISTILL_RETRIEVAL_H_
#define DISTILL_RETRIEVAL_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "distill/corpus.h"
#include "distill/embed_space.h"

namespace distill {

struct DocMeta {
  std::string doc_class;
  Fold fold = Fold::kTrain;
};

using DocCatalog = std::map<std::string, DocMeta>;

struct RetrievalResult {
  std::string chunk_id;
  int rank = 0;  // 1-based
  double distance = 0.0;
};

// Restricts a corpus-wide scan. Empty members mean "no restriction".
struct RetrievalFilter {
  std::optional<std::string> doc_class;
  std::vector<Fold> folds;
  const std::unordered_set<std::string>* doc_ids = nullptr;
};

// Exact search over precomputed chunk vectors of one ModelVersion.
// Immutable after build; concurrent queries are safe.
class ChunkIndex {
 public:
  struct Entry {
    std::string chunk_id;
    std::string doc_id;
    std::string doc_class;
    Fold fold = Fold::kTrain;
  };

  // Embeds every chunk. Chunks that fail to embed are skipped and listed in
  // warnings(); more than 1% failures is a build error.
  static ChunkIndex build(const ModelVersion& model,
                          std::span<const Chunk> chunks,
                          const DocCatalog& catalog);

  const ModelVersion& model() const { return model_; }
  size_t size() const { return entries_.size(); }
  uint32_t dim() const { return dim_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const Entry& entry(size_t i) const { return entries_[i]; }
  Vector vector(size_t i) const;
  std::optional<size_t> find(const std::string& chunk_id) const;
  bool has_doc(const std::string& doc_id) const;
  const std::vector<size_t>& doc_entries(const std::string& doc_id) const;

  // Distance from a query vector to entry i.
  double distance_to(const Vector& q, size_t i) const;

  // C_fold(q, K, i): the K closest chunks that pass `filter`, ordered by
  // (distance, chunk_id).
  std::vector<RetrievalResult> top_k(const Vector& q, size_t k,
                                     const RetrievalFilter& filter = {}) const;
  std::vector<RetrievalResult> top_k(std::string_view query, size_t k,
                                     const RetrievalFilter& filter = {}) const;

  // C_d(q, k, i): ranking restricted to one document.
  std::vector<RetrievalResult> top_k_within_doc(const Vector& q,
                                                const std::string& doc_id,
                                                size_t k) const;

  // Binary layout: magic "DSIX", version byte, model tag, dim (u32),
  // count (u64), count*dim little-endian f32, then count chunk ids.
  void save(const std::filesystem::path& path) const;
  // Chunk metadata is re-attached from `chunks_meta` (chunk_id -> entry).
  static ChunkIndex load(const std::filesystem::path& path,
                         const ModelVersion& model,
                         const std::unordered_map<std::string, Entry>& meta);

 private:
  bool passes(size_t i, const RetrievalFilter& filter) const;
  void finish();

  ModelVersion model_;
  uint32_t dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<float> vectors_;
  std::vector<std::string> warnings_;
  std::unordered_map<std::string, size_t> by_chunk_;
  std::unordered_map<std::string, std::vector<size_t>> by_doc_;
};

// D_fold(q, K, i): parent documents of a result list.
std::set<std::string> docs_of(std::span<const RetrievalResult> results,
                              const ChunkIndex& index);

}  // namespace distill

#endif  // DISTILL_RETRIEVAL_H_
