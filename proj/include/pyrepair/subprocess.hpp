// Copyright 2026 The pyrepair Authors
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

#ifndef PYREPAIR_SUBPROCESS_HPP_
#define PYREPAIR_SUBPROCESS_HPP_

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pyrepair {

struct ProcessResult {
  int exit_code = -1;    // valid when term_signal == 0
  int term_signal = 0;   // nonzero when the child died from a signal
  bool timed_out = false;
  std::string out;
  std::string err;

  bool succeeded() const { return !timed_out && term_signal == 0 && exit_code == 0; }
};

struct ProcessOptions {
  std::optional<std::filesystem::path> cwd;
  std::chrono::milliseconds timeout{10'000};
  // Extra KEY=VALUE entries appended to the inherited environment.
  std::vector<std::string> extra_env;
  // Captured streams are truncated past this many bytes.
  std::size_t output_limit = 1 << 20;
};

/// Runs argv[0] (resolved through PATH) with `input` on stdin, capturing
/// stdout and stderr. The child gets its own process group, which is killed
/// as a whole when the wall-clock timeout expires.
///
/// Throws EnvironmentError when the executable cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv,
                          std::string_view input,
                          const ProcessOptions& options = {});

/// mkdtemp-backed scratch directory, removed recursively on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view prefix = "pyrepair");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  TempDir(TempDir&& other) noexcept;
  TempDir& operator=(TempDir&&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace pyrepair

#endif  // PYREPAIR_SUBPROCESS_HPP_
