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

#ifndef DISTILL_EMBED_SPACE_H_
#define DISTILL_EMBED_SPACE_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distill/common.h"

namespace distill {

// A unit-norm embedding.
struct Vector {
  std::vector<float> values;

  size_t dim() const { return values.size(); }
  bool operator==(const Vector&) const = default;
};

// Cosine distance 1 - <u, v>, clamped to [0, 2]. Throws on dim mismatch.
double distance(const Vector& u, const Vector& v);

// Sorted by index, no duplicate indices.
struct SparseFeatures {
  std::vector<uint32_t> index;
  std::vector<double> value;

  size_t nnz() const { return index.size(); }
};

struct HashingSpec {
  uint32_t hash_dim = 1u << 15;
  uint64_t seed = 0;
};

// Lowercased alphanumeric tokens (bytes >= 0x80 count as word characters).
std::vector<std::string> tokenize(std::string_view text);

// Signed feature hashing of unigrams and bigrams. The unigram and bigram
// blocks are each L2-normalized before being summed, so a text with a single
// distinct unigram has weight exactly 1 on that bucket.
// Throws Error(kPrecondition, "unembeddable text") when no token survives.
SparseFeatures featurize(std::string_view text, const HashingSpec& spec);

// Parameters of the built-in trainable embedder: embed(t) = normalize(W x(t)).
// W is stored feature-major: column j (out_dim doubles) at [j * out_dim].
struct ReferenceParams {
  HashingSpec hashing;
  uint32_t out_dim = 64;
  std::vector<double> weights;

  std::span<const double> column(uint32_t j) const {
    return {weights.data() + static_cast<size_t>(j) * out_dim, out_dim};
  }
};

ReferenceParams init_reference_params(uint32_t hash_dim, uint32_t out_dim,
                                      uint64_t seed);

// Unnormalized projection W x, in double precision.
std::vector<double> project(const ReferenceParams& p, const SparseFeatures& x);

// Remote embedding service: POST /v1/embed {"model","texts"} -> {"vectors"}.
class EmbeddingClient {
 public:
  virtual ~EmbeddingClient() = default;
  virtual std::vector<std::vector<float>> embed(
      const std::string& model, std::span<const std::string> texts) = 0;
};

struct RetryPolicy {
  int max_attempts = 4;
  int base_delay_ms = 50;
  int timeout_s = 60;
};

class HttpEmbeddingClient : public EmbeddingClient {
 public:
  explicit HttpEmbeddingClient(std::string base_url, size_t batch_size = 64,
                               RetryPolicy retry = {});

  std::vector<std::vector<float>> embed(
      const std::string& model, std::span<const std::string> texts) override;

 private:
  std::string base_url_;
  size_t batch_size_;
  RetryPolicy retry_;
};

// bi-enc(i): either the reference embedder's parameters or an external
// endpoint. Immutable; copies share the parameters.
class ModelVersion {
 public:
  enum class Kind { kReference, kExternal };

  static ModelVersion reference(std::string tag, ReferenceParams params);
  static ModelVersion external(std::string tag, std::string model_name,
                               std::shared_ptr<EmbeddingClient> client);

  const std::string& tag() const { return tag_; }
  Kind kind() const { return kind_; }
  bool is_reference() const { return kind_ == Kind::kReference; }
  const ReferenceParams& params() const;
  const std::string& external_model() const { return external_model_; }
  EmbeddingClient& client() const;
  uint32_t dim() const;

 private:
  std::string tag_;
  Kind kind_ = Kind::kReference;
  std::shared_ptr<const ReferenceParams> params_;
  std::string external_model_;
  std::shared_ptr<EmbeddingClient> client_;
};

// Throws "unembeddable text" / "degenerate embedding" as kPrecondition.
Vector embed(const ModelVersion& model, std::string_view text);
std::vector<Vector> embed_batch(const ModelVersion& model,
                                std::span<const std::string> texts);

// Checkpoint: magic "DSCK", version byte, tag, F, d, seed, then W as
// little-endian f64 in feature-major order.
void save_checkpoint(const std::filesystem::path& path,
                     const ModelVersion& model);
ModelVersion load_checkpoint(const std::filesystem::path& path);

}  // namespace distill

#endif  // DISTILL_EMBED_SPACE_H_
