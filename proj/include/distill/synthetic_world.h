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

// A generated corpus with planted topic structure, and a teacher that knows
// the plan. Stands in for a real corpus and LLM in tests and offline runs.
//
// Every class owns a set of topics. A topic has document terms, query terms
// and a few facets; each facet pairs an answer token (written into documents)
// with a cue word (written into queries). Every chunk is about one topic and
// may carry one facet's answer token.

#ifndef DISTILL_SYNTHETIC_WORLD_H_
#define DISTILL_SYNTHETIC_WORLD_H_

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "distill/corpus.h"
#include "distill/embed_space.h"
#include "distill/teacher_io.h"

namespace distill {

struct WorldSpec {
  uint64_t seed = 7;
  size_t n_classes = 3;
  size_t docs_per_class = 200;
  size_t chunks_per_doc = 40;
  size_t topics_per_class = 8;
  size_t facets_per_topic = 4;
  size_t topics_per_doc = 5;
  size_t doc_terms_per_topic = 6;
  size_t query_terms_per_topic = 3;
  double answer_rate = 0.35;
  double doc_term_in_query_rate = 0.5;
  double fewshot_junk_rate = 0.1;
  std::string first_date = "2024-01-01";
  std::string last_date = "2024-07-31";
  std::string test_start = "2024-07-01";

  void validate() const;
  json to_json() const;
  static WorldSpec from_json(const json& j);
};

// Every synthetic sentence unit is padded to this many characters, so with
// the default chunk bounds one chunk holds exactly kSentencesPerChunk units.
inline constexpr size_t kSentenceChars = 120;
inline constexpr size_t kSentencesPerChunk = 8;

struct Topic {
  size_t id = 0;  // global
  size_t class_index = 0;
  std::vector<std::string> doc_terms;
  std::vector<std::string> query_terms;
  std::vector<std::string> answers;  // per facet
  std::vector<std::string> cues;     // per facet
};

class World {
 public:
  explicit World(WorldSpec spec);

  const WorldSpec& spec() const { return spec_; }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<Topic>& topics() const { return topics_; }
  const std::vector<Document>& documents() const { return documents_; }

  // What a text says about the plan.
  struct Reading {
    int topic = -1;              // most frequent topic signal, -1 when none
    int facet = -1;              // first cue (queries) or answer (passages)
    std::vector<std::pair<int, int>> answers;  // (topic, facet) tokens seen
  };
  Reading read_passage(std::string_view text) const;
  Reading read_query(std::string_view text) const;

  // Relevance on the four-point scale.
  int relevance(std::string_view query, std::string_view passage) const;

  void write_documents(const std::filesystem::path& path) const;

 private:
  enum class Role { kDocTerm, kQueryTerm, kAnswer, kCue, kClassWord, kFiller };
  struct WordInfo {
    Role role;
    int topic;
    int facet;
  };

  void build_vocabulary(Rng& rng);
  void build_documents(Rng& rng);
  std::string sentence(Rng& rng, const Topic& t, const std::string& extra) const;

  WorldSpec spec_;
  std::vector<std::string> classes_;
  std::vector<Topic> topics_;
  std::vector<std::vector<std::string>> class_words_;
  std::vector<std::string> fillers_;
  std::unordered_map<std::string, WordInfo> words_;
  std::vector<Document> documents_;
};

// Deterministic teacher over a World: every reply is a pure function of the
// request.
class OracleTeacher : public TeacherClient {
 public:
  explicit OracleTeacher(std::shared_ptr<const World> world);

  std::vector<GeneratedQuery> generate(const std::string& passage, int n,
                                       const std::string& template_id) override;
  std::vector<std::string> generate_fewshot(
      const std::vector<std::string>& exemplars, int n,
      const std::string& template_id) override;
  json judge(const std::string& query, const std::string& passage,
             const std::string& rubric_id) override;

  const World& world() const { return *world_; }

 private:
  std::string render_query(const Topic& t, int facet, uint64_t h,
                           bool fewshot) const;

  std::shared_ptr<const World> world_;
};

}  // namespace distill

#endif  // DISTILL_SYNTHETIC_WORLD_H_
