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

#ifndef DISTILL_COMMON_H_
#define DISTILL_COMMON_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace distill {

using json = nlohmann::json;

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  kPrecondition,  // exit 2
  kExternal,      // exit 3
  kBudget,        // exit 4
  kData,          // exit 1
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kPrecondition, what);
}

int exit_code_for(ErrorKind kind);

// ---------------------------------------------------------------------------
// Deterministic randomness.
//
// std::*_distribution output is implementation-defined, so everything that
// must be reproducible goes through this wrapper instead.

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  // Uniform integer in [0, n). n must be > 0.
  uint64_t uniform(uint64_t n);
  // Uniform real in [0, 1) with 53 random bits.
  double uniform01();
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

uint64_t splitmix64(uint64_t x);
uint64_t hash64(std::string_view s, uint64_t seed = 0);
// Derives an independent stream seed from a base seed and a label.
uint64_t derive_seed(uint64_t seed, std::string_view label);

// ---------------------------------------------------------------------------
// Dates.

using Date = std::chrono::year_month_day;

Date parse_date(std::string_view s);  // "YYYY-MM-DD"
std::string format_date(const Date& d);

// ---------------------------------------------------------------------------
// Text helpers.

// Byte offset of every UTF-8 scalar in `text`, plus text.size() at the end.
std::vector<size_t> utf8_offsets(std::string_view text);
size_t utf8_length(std::string_view text);
bool is_ascii_space(char c);
std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);
// Turns a class label like "SC 13D/A" into something usable as a file name.
std::string slugify(std::string_view s);

// ---------------------------------------------------------------------------
// Files.

std::vector<json> read_jsonl(const std::filesystem::path& path);
// Writes to a temporary sibling and renames, so readers never see a torn file.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<json>& rows);
json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& value);
void write_bytes(const std::filesystem::path& path, std::string_view bytes);
std::string read_bytes(const std::filesystem::path& path);

std::string sha256_hex(std::string_view bytes);
std::string file_sha256(const std::filesystem::path& path);

}  // namespace distill

#endif  // DISTILL_COMMON_H_
