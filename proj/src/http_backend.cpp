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

#include "httplib.h"

#include <algorithm>
#include <cstdlib>
#include <regex>
#include <thread>

#include "json.hpp"
#include "pyrepair/error.hpp"
#include "pyrepair/gateway.hpp"

namespace pyrepair {
namespace {

using nlohmann::json;

// OpenAI-compatible endpoints accept at most four stop sequences.
constexpr std::size_t kMaxStopSequences = 4;

bool retryable(int status) { return status == 429 || status >= 500; }

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<1024>& sem) : sem_(sem) { sem_.acquire(); }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<1024>& sem_;
};

}  // namespace

HttpConfig HttpConfig::from_env() {
  HttpConfig config;
  if (const char* key = std::getenv("MODEL_API_KEY")) config.api_key = key;
  return config;
}

HttpBackend::HttpBackend(HttpConfig config)
    : config_(std::move(config)),
      in_flight_(static_cast<std::ptrdiff_t>(
          std::clamp<std::size_t>(config_.max_in_flight, 1, 1024))) {
  static const std::regex url(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(config_.endpoint, m, url)) {
    throw Error("invalid completions endpoint URL '" + config_.endpoint + "'");
  }
  origin_ = m[1].str();
  path_ = m[2].matched ? m[2].str() : "/v1/completions";
}

std::vector<Generation> parse_completions_response(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw BackendError(std::string("malformed completions response: ") + e.what(), 200);
  }
  if (!doc.contains("choices") || !doc["choices"].is_array()) {
    throw BackendError("completions response has no choices array", 200);
  }
  std::vector<std::pair<long, Generation>> indexed;
  long fallback = 0;
  for (const auto& choice : doc["choices"]) {
    Generation gen;
    gen.text = choice.value("text", std::string());
    const auto lp = choice.find("logprobs");
    if (lp != choice.end() && lp->is_object() && lp->contains("token_logprobs")) {
      double sum = 0;
      std::size_t n = 0;
      for (const auto& v : (*lp)["token_logprobs"]) {
        if (v.is_number()) {
          sum += v.get<double>();
          ++n;
        }
      }
      if (n) gen.mean_logprob = sum / static_cast<double>(n);
    }
    long index = choice.contains("index") ? choice["index"].get<long>() : fallback;
    ++fallback;
    indexed.emplace_back(index, std::move(gen));
  }
  std::stable_sort(indexed.begin(), indexed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Generation> out;
  for (auto& [i, g] : indexed) out.push_back(std::move(g));
  return out;
}

std::vector<Generation> HttpBackend::complete(const Prompt& prompt,
                                              const GenParams& params) {
  json body = {
      {"model", config_.model},
      {"prompt", prompt.text},
      {"temperature", params.temperature},
      {"n", params.samples_per_prompt},
      {"max_tokens", params.max_new_tokens},
      {"logprobs", 1},
  };
  if (!params.stop_markers.empty()) {
    std::vector<std::string> stop(
        params.stop_markers.begin(),
        params.stop_markers.begin() +
            static_cast<std::ptrdiff_t>(std::min(kMaxStopSequences, params.stop_markers.size())));
    body["stop"] = stop;
  }
  const std::string payload = body.dump();

  httplib::Headers headers;
  if (!config_.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config_.api_key);
  }

  auto backoff = config_.initial_backoff;
  int last_status = 0;
  std::string last_error;
  for (std::size_t attempt = 0;; ++attempt) {
    std::chrono::milliseconds wait = backoff;
    {
      SlotGuard slot(in_flight_);
      httplib::Client client(origin_);
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
      const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
          config_.timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      client.set_write_timeout(secs.count(), usecs.count());

      auto res = client.Post(path_, headers, payload, "application/json");
      if (!res) {
        last_status = 0;
        last_error = httplib::to_string(res.error());
      } else if (res->status == 200) {
        auto gens = parse_completions_response(res->body);
        if (gens.size() > params.samples_per_prompt) gens.resize(params.samples_per_prompt);
        return gens;
      } else {
        last_status = res->status;
        last_error = "HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200);
        if (!retryable(res->status)) {
          throw BackendError("completions request rejected: " + last_error, last_status);
        }
        if (res->has_header("Retry-After")) {
          try {
            auto after = std::chrono::seconds(std::stol(res->get_header_value("Retry-After")));
            wait = std::max(wait, std::chrono::duration_cast<std::chrono::milliseconds>(after));
          } catch (const std::exception&) {
            // HTTP-date form; keep the computed backoff.
          }
        }
      }
    }
    if (attempt >= config_.max_retries) break;
    std::this_thread::sleep_for(wait);
    backoff = std::min(backoff * 2, config_.max_backoff);
  }
  throw BackendError("completions request failed after " +
                         std::to_string(config_.max_retries + 1) +
                         " attempts: " + last_error,
                     last_status);
}

}  // namespace pyrepair
