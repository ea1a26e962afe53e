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

// Document ingestion, sentence-packing chunker, date-based fold split and
// per-class document sampling.

#ifndef DISTILL_CORPUS_H_
#define DISTILL_CORPUS_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distill/common.h"

namespace distill {

enum class Fold { kTrain, kVal, kTest };

std::string_view fold_name(Fold f);
Fold parse_fold(std::string_view s);

struct Document {
  std::string doc_id;
  std::string doc_class;
  Date date;
  std::string text;
};

// Spans count Unicode scalars, not bytes: text == parent[start, end).
struct Chunk {
  std::string chunk_id;
  std::string doc_id;
  size_t start = 0;
  size_t end = 0;
  std::string text;

  size_t length() const { return end - start; }
};

std::string make_chunk_id(std::string_view doc_id, size_t ordinal);

// Half-open scalar span of one sentence unit (sentence plus trailing
// whitespace).
struct SentenceSpan {
  size_t start = 0;
  size_t end = 0;
};

// Splits after '.', '!' or '?' followed by whitespace, and after newline
// runs. Whitespace following a boundary belongs to the preceding unit, so the
// units tile the text exactly.
std::vector<SentenceSpan> split_sentences(std::string_view text);

// Greedy sentence packing. A unit that would overflow max_len closes the
// current chunk; if the current chunk is still shorter than min_len, the
// overflowing unit is cut at the last whitespace that keeps the chunk inside
// [min_len, max_len] (or hard-cut at max_len when no whitespace fits).
// A unit longer than max_len on its own is emitted whole. The last chunk of a
// document may be short.
std::vector<Chunk> chunk_document(const Document& doc, size_t min_len = 500,
                                  size_t max_len = 1000);

struct FoldAssignment {
  std::map<std::string, Fold> fold_of;
  // First validation date per class; nullopt when the class went all-train.
  std::map<std::string, std::optional<Date>> split_date;
  std::vector<std::string> warnings;

  Fold at(const std::string& doc_id) const;
  std::vector<std::string> docs_in(Fold f) const;
};

// Documents dated on or after `test_start` go to test. For every class the
// remaining documents are split at the latest date whose later documents hold
// at least `val_fraction_target` of the class's train-val chunks.
FoldAssignment assign_folds(std::span<const Document> docs,
                            const std::map<std::string, size_t>& chunk_counts,
                            const Date& test_start,
                            double val_fraction_target = 0.30);

// Per class, draws documents uniformly without replacement until the drawn
// chunk count first reaches `target_chunks_per_class`. Returns sorted doc ids.
std::vector<std::string> sample_per_class(
    std::span<const Document> docs,
    const std::map<std::string, size_t>& chunk_counts,
    size_t target_chunks_per_class, uint64_t seed);

// JSONL wire forms.
json document_to_json(const Document& d);
Document document_from_json(const json& j);
json chunk_to_json(const Chunk& c);
Chunk chunk_from_json(const json& j);

// Reads documents, rejecting duplicate ids. Output sorted by doc_id.
std::vector<Document> load_documents(const std::filesystem::path& path);

}  // namespace distill

#endif  // DISTILL_CORPUS_H_
