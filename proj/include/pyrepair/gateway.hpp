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

#ifndef PYREPAIR_GATEWAY_HPP_
#define PYREPAIR_GATEWAY_HPP_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "pyrepair/prompts.hpp"

namespace pyrepair {

struct GenParams {
  double temperature = 0.8;
  std::size_t samples_per_prompt = 10;
  std::size_t max_new_tokens = 512;
  std::vector<std::string> stop_markers = {"###", "# Buggy Program #"};
};

struct Generation {
  std::string text;
  std::optional<double> mean_logprob;  // mean per-token log probability

  bool operator==(const Generation&) const = default;
};

/// Anything that turns a prompt into sampled completions.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  /// Returns at most params.samples_per_prompt generations.
  virtual std::vector<Generation> complete(const Prompt& prompt,
                                           const GenParams& params) = 0;
};

/// Lowercase hex SHA-256 of the prompt text; the fixture key.
std::string prompt_digest(std::string_view prompt_text);

// ---------------------------------------------------------------------------
// Fixtures
//
//   { "format": "pyrepair-fixtures/1",
//     "completions": { "<digest>": [ {"text": "...", "mean_logprob": -0.2},
//                                    {"text": "..."} ] } }

using FixtureMap = std::map<std::string, std::vector<Generation>>;

FixtureMap load_fixtures(const std::filesystem::path& path);
void save_fixtures(const FixtureMap& fixtures, const std::filesystem::path& path);

/// Replays recorded completions keyed by prompt digest. Throws
/// FixtureMissError for prompts it has never seen.
class MockBackend : public CompletionBackend {
 public:
  explicit MockBackend(FixtureMap fixtures) : fixtures_(std::move(fixtures)) {}
  explicit MockBackend(const std::filesystem::path& path)
      : MockBackend(load_fixtures(path)) {}

  std::vector<Generation> complete(const Prompt& prompt,
                                   const GenParams& params) override;

  std::size_t calls() const;

 private:
  FixtureMap fixtures_;
  mutable std::mutex mu_;
  std::size_t calls_ = 0;
};

/// Answers prompts from an ordered rule list; the first rule whose
/// conditions all hold wins, and no match yields no generations. Used to
/// author fixtures (wrap it in a RecordingBackend).
///
///   { "rules": [ { "kind": "syntax" | "syntax-plain" | "syntax-with-diagnostic"
///                          | "semantic" | "any",
///                  "structure": "program+tests",      (requested; optional)
///                  "contains": ["..."], "excludes": ["..."],
///                  "completions": [ {"text": "...", "mean_logprob": -0.1} ] } ] }
class ScriptedBackend : public CompletionBackend {
 public:
  struct Rule {
    std::string kind = "any";
    std::optional<Structure> structure;
    std::vector<std::string> contains;
    std::vector<std::string> excludes;
    std::vector<Generation> completions;
  };

  explicit ScriptedBackend(std::vector<Rule> rules) : rules_(std::move(rules)) {}
  static ScriptedBackend from_file(const std::filesystem::path& path);

  std::vector<Generation> complete(const Prompt& prompt,
                                   const GenParams& params) override;

 private:
  std::vector<Rule> rules_;
};

/// Passes requests through and remembers every (digest -> generations).
class RecordingBackend : public CompletionBackend {
 public:
  explicit RecordingBackend(CompletionBackend& inner) : inner_(inner) {}

  std::vector<Generation> complete(const Prompt& prompt,
                                   const GenParams& params) override;

  FixtureMap recorded() const;
  /// Merges into an existing fixture file if there is one.
  void save(const std::filesystem::path& path) const;

 private:
  CompletionBackend& inner_;
  mutable std::mutex mu_;
  FixtureMap recorded_;
};

// ---------------------------------------------------------------------------

struct HttpConfig {
  /// Full URL of an OpenAI-compatible completions endpoint, e.g.
  /// https://api.openai.com/v1/completions
  std::string endpoint = "https://api.openai.com/v1/completions";
  std::string model;
  std::string api_key;  // sent as a bearer token when non-empty
  std::chrono::milliseconds timeout{60'000};
  std::size_t max_retries = 4;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds max_backoff{16'000};
  std::size_t max_in_flight = 4;

  /// Defaults with api_key taken from $MODEL_API_KEY.
  static HttpConfig from_env();
};

/// Remote completions over HTTP(S). Retries transport failures, 429 and
/// 5xx with exponential backoff (honouring Retry-After); other statuses fail
/// immediately. Concurrent callers share an in-flight cap.
class HttpBackend : public CompletionBackend {
 public:
  explicit HttpBackend(HttpConfig config);

  std::vector<Generation> complete(const Prompt& prompt,
                                   const GenParams& params) override;

 private:
  HttpConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
};

/// Parses an OpenAI completions response body into generations, ordered
/// by choice index. Mean log probability comes from logprobs.token_logprobs.
std::vector<Generation> parse_completions_response(std::string_view body);

// ---------------------------------------------------------------------------

/// Code portion of a generation: cut at the first stop marker, drop code
/// fence lines and surrounding blank lines. Semantic-phase results are whole
/// programs and get a trailing newline; syntax-phase results replace a
/// chunk and do not. nullopt when nothing but whitespace remains.
std::optional<std::string> extract_code(const Generation& gen, PromptKind kind,
                                        const std::vector<std::string>& stop_markers);

/// The k generations with the highest mean log probability, duplicates
/// (same text) collapsed; generations without log probabilities follow in
/// backend order.
std::vector<Generation> top_k_by_logprob(const std::vector<Generation>& gens,
                                         std::size_t k = 10);

}  // namespace pyrepair

#endif  // PYREPAIR_GATEWAY_HPP_
