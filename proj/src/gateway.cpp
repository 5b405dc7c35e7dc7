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

#include "pyrepair/gateway.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <set>

#include "json.hpp"
#include "pyrepair/error.hpp"
#include "pyrepair/text.hpp"

namespace pyrepair {
namespace {

using nlohmann::json;

constexpr std::string_view kFixtureFormat = "pyrepair-fixtures/1";

std::vector<Generation> generations_from_json(const json& arr) {
  std::vector<Generation> out;
  for (const auto& g : arr) {
    Generation gen;
    gen.text = g.at("text").get<std::string>();
    if (g.contains("mean_logprob") && !g["mean_logprob"].is_null()) {
      gen.mean_logprob = g["mean_logprob"].get<double>();
    }
    out.push_back(std::move(gen));
  }
  return out;
}

json generations_to_json(const std::vector<Generation>& gens) {
  json arr = json::array();
  for (const auto& g : gens) {
    json j = {{"text", g.text}};
    if (g.mean_logprob) j["mean_logprob"] = *g.mean_logprob;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool kind_matches(std::string_view rule, PromptKind kind) {
  if (rule == "any") return true;
  if (rule == "syntax") return kind != PromptKind::Semantic;
  return rule == to_string(kind);
}

std::vector<Generation> truncate(std::vector<Generation> gens, std::size_t n) {
  if (gens.size() > n) gens.resize(n);
  return gens;
}

}  // namespace

std::string prompt_digest(std::string_view prompt_text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(prompt_text.data(), prompt_text.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

FixtureMap load_fixtures(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path.string()));
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": invalid fixture file: " + e.what());
  }
  if (doc.value("format", std::string(kFixtureFormat)) != kFixtureFormat) {
    throw LoadError(path.string() + ": unsupported fixture format");
  }
  FixtureMap fixtures;
  try {
    for (const auto& [digest, arr] : doc.at("completions").items()) {
      fixtures[digest] = generations_from_json(arr);
    }
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": invalid fixture file: " + e.what());
  }
  return fixtures;
}

void save_fixtures(const FixtureMap& fixtures, const std::filesystem::path& path) {
  json doc = {{"format", kFixtureFormat}, {"completions", json::object()}};
  for (const auto& [digest, gens] : fixtures) {
    doc["completions"][digest] = generations_to_json(gens);
  }
  write_file(path.string(), doc.dump(2) + "\n");
}

std::vector<Generation> MockBackend::complete(const Prompt& prompt,
                                              const GenParams& params) {
  const auto digest = prompt_digest(prompt.text);
  {
    std::lock_guard lock(mu_);
    ++calls_;
  }
  auto it = fixtures_.find(digest);
  if (it == fixtures_.end()) throw FixtureMissError(digest);
  return truncate(it->second, params.samples_per_prompt);
}

std::size_t MockBackend::calls() const {
  std::lock_guard lock(mu_);
  return calls_;
}

ScriptedBackend ScriptedBackend::from_file(const std::filesystem::path& path) {
  json doc;
  try {
    doc = json::parse(read_file(path.string()));
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": invalid rules file: " + e.what());
  }
  std::vector<Rule> rules;
  for (const auto& r : doc.at("rules")) {
    Rule rule;
    rule.kind = r.value("kind", std::string("any"));
    if (r.contains("structure")) {
      rule.structure = Structure::parse(r["structure"].get<std::string>());
    }
    rule.contains = r.value("contains", std::vector<std::string>{});
    rule.excludes = r.value("excludes", std::vector<std::string>{});
    rule.completions = generations_from_json(r.at("completions"));
    rules.push_back(std::move(rule));
  }
  return ScriptedBackend(std::move(rules));
}

std::vector<Generation> ScriptedBackend::complete(const Prompt& prompt,
                                                  const GenParams& params) {
  for (const auto& rule : rules_) {
    if (!kind_matches(rule.kind, prompt.kind)) continue;
    if (rule.structure && *rule.structure != prompt.requested) continue;
    auto found = [&](const std::string& s) {
      return prompt.text.find(s) != std::string::npos;
    };
    if (!std::all_of(rule.contains.begin(), rule.contains.end(), found)) continue;
    if (std::any_of(rule.excludes.begin(), rule.excludes.end(), found)) continue;
    return truncate(rule.completions, params.samples_per_prompt);
  }
  return {};
}

std::vector<Generation> RecordingBackend::complete(const Prompt& prompt,
                                                   const GenParams& params) {
  auto gens = inner_.complete(prompt, params);
  std::lock_guard lock(mu_);
  recorded_[prompt_digest(prompt.text)] = gens;
  return gens;
}

FixtureMap RecordingBackend::recorded() const {
  std::lock_guard lock(mu_);
  return recorded_;
}

void RecordingBackend::save(const std::filesystem::path& path) const {
  FixtureMap merged;
  if (std::filesystem::exists(path)) merged = load_fixtures(path);
  for (auto& [digest, gens] : recorded()) merged[digest] = gens;
  save_fixtures(merged, path);
}

std::optional<std::string> extract_code(const Generation& gen, PromptKind kind,
                                        const std::vector<std::string>& stop_markers) {
  std::string_view text = gen.text;
  std::size_t cut = text.size();
  for (const auto& marker : stop_markers) {
    if (marker.empty()) continue;
    cut = std::min(cut, text.find(marker));
  }
  text = text.substr(0, cut);

  std::vector<std::string> lines;
  for (auto& line : split_lines(text)) {
    if (ltrim(line).substr(0, 3) == "```") continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && is_blank(lines.back())) lines.pop_back();
  auto first = std::find_if(lines.begin(), lines.end(),
                            [](const std::string& l) { return !is_blank(l); });
  lines.erase(lines.begin(), first);
  if (lines.empty()) return std::nullopt;

  std::string code = join_lines(lines);
  if (kind == PromptKind::Semantic) code += '\n';
  return code;
}

std::vector<Generation> top_k_by_logprob(const std::vector<Generation>& gens,
                                         std::size_t k) {
  std::vector<Generation> ranked, unranked;
  for (const auto& g : gens) (g.mean_logprob ? ranked : unranked).push_back(g);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Generation& a, const Generation& b) {
                     return *a.mean_logprob > *b.mean_logprob;
                   });
  std::vector<Generation> out;
  std::set<std::string> seen;
  for (auto* group : {&ranked, &unranked}) {
    for (auto& g : *group) {
      if (out.size() >= k) return out;
      if (seen.insert(g.text).second) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace pyrepair
