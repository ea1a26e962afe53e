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

// Serves a TeacherClient (and optionally a reference embedder) over the
// JSON wire contract that HttpTeacherClient and HttpEmbeddingClient speak.

#ifndef DISTILL_SERVING_H_
#define DISTILL_SERVING_H_

#include <memory>
#include <optional>
#include <string>

#include "distill/embed_space.h"
#include "distill/teacher_io.h"

namespace distill {

class WireServer {
 public:
  WireServer(std::shared_ptr<TeacherClient> teacher,
             std::optional<ModelVersion> embedder = std::nullopt);
  ~WireServer();
  WireServer(const WireServer&) = delete;
  WireServer& operator=(const WireServer&) = delete;

  // Binds (port 0 picks a free one) and serves on a background thread.
  // Returns the bound port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  // Binds and serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace distill

#endif  // DISTILL_SERVING_H_
