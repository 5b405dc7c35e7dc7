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

#include "pyrepair/pipeline.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "pyrepair/chunker.hpp"
#include "pyrepair/tokens.hpp"

namespace pyrepair {
namespace {

constexpr std::size_t kValidationWidth = 4;

// fn(i) for i in [0, n), at most `width` at a time; results keep index order.
template <class F>
auto parallel_map(std::size_t n, std::size_t width, F fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t begin = 0; begin < n; begin += width) {
    std::vector<std::future<R>> batch;
    const std::size_t end = std::min(n, begin + width);
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, fn, i));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

// Best first: higher log probability, absent last, stable otherwise.
void rank_by_logprob(std::vector<Candidate>& cands) {
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    const double la = a.mean_logprob.value_or(-std::numeric_limits<double>::infinity());
    const double lb = b.mean_logprob.value_or(-std::numeric_limits<double>::infinity());
    return la > lb;
  });
}

std::string describe(const Diagnostic& d) {
  return "line " + std::to_string(d.line) + ": " + d.message;
}

}  // namespace

std::string_view to_string(Phase phase) {
  return phase == Phase::Syntax ? "syntax" : "semantic";
}

std::string_view to_string(RepairStatus status) {
  switch (status) {
    case RepairStatus::Repaired: return "repaired";
    case RepairStatus::SyntaxFixedOnly: return "syntax-fixed-only";
    case RepairStatus::Failed: return "failed";
  }
  return "failed";
}

std::size_t RepairResult::model_calls() const {
  return std::accumulate(trace.begin(), trace.end(), std::size_t{0},
                         [](std::size_t acc, const TraceEntry& e) {
                           return acc + e.prompts_issued;
                         });
}

RepairEngine::RepairEngine(CompletionBackend& backend, const PythonOracle& oracle,
                           PipelineConfig config)
    : backend_(backend), oracle_(oracle), config_(std::move(config)) {
  if (config_.max_syntax_iterations < 1) {
    throw std::invalid_argument("max_syntax_iterations must be at least 1");
  }
  if (config_.gen_params.samples_per_prompt < 1) {
    throw std::invalid_argument("samples_per_prompt must be at least 1");
  }
  if (config_.gen_params.temperature < 0) {
    throw std::invalid_argument("temperature must be non-negative");
  }
}

std::span<const Structure> RepairEngine::structures() const {
  if (config_.prompt_structures.empty()) return kSemanticStructures;
  return config_.prompt_structures;
}

std::vector<std::vector<Generation>> RepairEngine::complete_all(
    std::span<const Prompt> prompts) {
  return parallel_map(prompts.size(), prompts.size() ? prompts.size() : 1,
                      [&](std::size_t i) {
                        return top_k_by_logprob(
                            backend_.complete(prompts[i], config_.gen_params),
                            config_.top_k);
                      });
}

std::vector<Candidate> RepairEngine::syntax_phase(std::string_view program,
                                                  std::vector<TraceEntry>* trace) {
  std::vector<TraceEntry> local;
  if (!trace) trace = &local;

  const std::size_t rounds = config_.use_iterative ? config_.max_syntax_iterations : 1;
  std::vector<Candidate> valid;
  std::set<std::string> seen;
  std::string frontier(program);

  for (std::size_t round = 1; round <= rounds; ++round) {
    auto verdict = oracle_.check_syntax(frontier);
    if (verdict.ok()) break;
    const Diagnostic& diag = verdict.first();
    const Chunk region = config_.use_chunking ? chunk(frontier, diag) : whole_program(frontier);
    const auto prompts = syntax_prompts(region, diag);

    TraceEntry entry;
    entry.phase = Phase::Syntax;
    entry.iteration = round;
    entry.prompts_issued = prompts.size();
    entry.note = "first error " + describe(diag) + "; chunk lines " +
                 std::to_string(region.start + 1) + "-" + std::to_string(region.end);
    trace->push_back(entry);
    auto results = complete_all(prompts);

    struct Pending {
      std::string merged;
      const Prompt* prompt;
      std::optional<double> logprob;
    };
    std::vector<Pending> pending;
    for (std::size_t p = 0; p < prompts.size(); ++p) {
      for (const auto& gen : results[p]) {
        ++entry.generations;
        auto code = extract_code(gen, prompts[p].kind, config_.gen_params.stop_markers);
        if (!code) {
          entry.discarded.push_back("empty generation");
          continue;
        }
        auto merged = merge_chunk(frontier, region, *code);
        if (!seen.insert(merged).second) {
          entry.discarded.push_back("duplicate candidate");
          continue;
        }
        pending.push_back({std::move(merged), &prompts[p], gen.mean_logprob});
      }
    }
    auto verdicts = parallel_map(pending.size(), kValidationWidth, [&](std::size_t i) {
      return oracle_.check_syntax(pending[i].merged);
    });

    struct Invalid {
      std::size_t index;
      std::size_t error_line;
      std::size_t ted;
    };
    std::vector<Invalid> invalid;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (verdicts[i].ok()) {
        valid.push_back(Candidate{pending[i].merged, Phase::Syntax,
                                  std::string(to_string(pending[i].prompt->kind)),
                                  pending[i].logprob, round});
        ++entry.kept;
      } else {
        entry.discarded.push_back("syntax oracle rejected (" + describe(verdicts[i].first()) + ")");
        invalid.push_back({i, verdicts[i].first().line,
                           token_edit_distance(frontier, pending[i].merged)});
      }
    }
    trace->back() = entry;
    if (!valid.empty() || invalid.empty()) break;

    // Continue from the merge whose first remaining error sits furthest down.
    auto next = std::min_element(invalid.begin(), invalid.end(),
                                 [](const Invalid& a, const Invalid& b) {
                                   if (a.error_line != b.error_line) return a.error_line > b.error_line;
                                   if (a.ted != b.ted) return a.ted < b.ted;
                                   return a.index < b.index;
                                 });
    frontier = pending[next->index].merged;
  }

  rank_by_logprob(valid);
  if (valid.size() > config_.top_k) valid.resize(config_.top_k);
  return valid;
}

std::vector<Candidate> RepairEngine::semantic_phase(std::span<const Candidate> candidates,
                                                    const Assignment& assignment,
                                                    const RepairOptions& options,
                                                    std::vector<TraceEntry>* trace) {
  std::vector<TraceEntry> local;
  if (!trace) trace = &local;

  std::vector<Candidate> valid;
  std::set<std::string> seen;
  for (const auto& c : candidates) seen.insert(c.source);

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const Candidate& cand = candidates[ci];
    TraceEntry entry;
    entry.phase = Phase::Semantic;
    entry.iteration = ci + 1;

    auto report = oracle_.run_tests(cand.source, assignment.tests);
    if (report.all_passed()) {
      entry.note = "input candidate passes all tests";
      entry.kept = 1;
      trace->push_back(entry);
      valid.push_back(cand);
      continue;
    }

    std::vector<ExamplePair> shots;
    if (config_.use_few_shot && !options.bank.empty()) {
      shots = select_shots(options.bank, report.vector, config_.shots,
                           ShotFilter{options.student, cand.source});
    }
    const auto diagnostics = failure_summary(report, assignment.tests);
    std::vector<Prompt> prompts;
    for (auto s : structures()) {
      prompts.push_back(semantic_prompt(cand.source, assignment, shots, diagnostics, s));
    }
    entry.prompts_issued = prompts.size();
    entry.note = std::to_string(report.vector.failure_count()) + "/" +
                 std::to_string(report.vector.size()) + " tests failing; " +
                 std::to_string(shots.size()) + " shots";
    trace->push_back(entry);
    auto results = complete_all(prompts);

    struct Pending {
      std::string code;
      const Prompt* prompt;
      std::optional<double> logprob;
    };
    std::vector<Pending> pending;
    for (std::size_t p = 0; p < prompts.size(); ++p) {
      for (const auto& gen : results[p]) {
        ++entry.generations;
        auto code = extract_code(gen, PromptKind::Semantic, config_.gen_params.stop_markers);
        if (!code) {
          entry.discarded.push_back("empty generation");
          continue;
        }
        if (!seen.insert(*code).second) {
          entry.discarded.push_back("duplicate candidate");
          continue;
        }
        pending.push_back({std::move(*code), &prompts[p], gen.mean_logprob});
      }
    }

    // Each element: empty when valid, else the discard reason.
    auto reasons = parallel_map(pending.size(), kValidationWidth, [&](std::size_t i) {
      auto verdict = oracle_.check_syntax(pending[i].code);
      if (!verdict.ok()) {
        return "syntax oracle rejected (" + describe(verdict.first()) + ")";
      }
      auto r = oracle_.run_tests(pending[i].code, assignment.tests);
      if (auto f = r.first_failure()) {
        return "test " + std::to_string(*f + 1) + " " +
               std::string(to_string(r.per_test[*f].status));
      }
      return std::string();
    });
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (!reasons[i].empty()) {
        entry.discarded.push_back(reasons[i]);
        continue;
      }
      valid.push_back(Candidate{pending[i].code, Phase::Semantic,
                                pending[i].prompt->requested.name(), pending[i].logprob,
                                ci + 1});
      ++entry.kept;
    }
    trace->back() = entry;
  }
  return valid;
}

RepairResult RepairEngine::repair(std::string_view program, const Assignment& assignment,
                                  const RepairOptions& options) {
  RepairResult result;
  try {
    std::vector<Candidate> candidates;
    if (oracle_.check_syntax(program).ok()) {
      candidates.push_back(Candidate{std::string(program), Phase::Syntax, "original",
                                     std::nullopt, 0});
    } else {
      candidates = syntax_phase(program, &result.trace);
      if (candidates.empty()) {
        result.status = RepairStatus::Failed;
        return result;
      }
    }
    auto valid = semantic_phase(candidates, assignment, options, &result.trace);
    const Candidate& best =
        valid.empty() ? select_final(candidates, program) : select_final(valid, program);
    result.status = valid.empty() ? RepairStatus::SyntaxFixedOnly : RepairStatus::Repaired;
    result.program = best.source;
    result.ted = token_edit_distance(best.source, program);
    return result;
  } catch (const Error& e) {
    throw PipelineError(e.what(), std::move(result.trace), std::current_exception());
  }
}

const Candidate& select_final(std::span<const Candidate> valid, std::string_view original) {
  if (valid.empty()) throw std::invalid_argument("select_final: no candidates");
  const auto original_tokens = tokenize(original);
  std::size_t best = 0;
  std::size_t best_ted = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < valid.size(); ++i) {
    const std::size_t ted = levenshtein(tokenize(valid[i].source), original_tokens);
    const double lp = valid[i].mean_logprob.value_or(-std::numeric_limits<double>::infinity());
    const double best_lp =
        valid[best].mean_logprob.value_or(-std::numeric_limits<double>::infinity());
    if (ted < best_ted || (ted == best_ted && lp > best_lp)) {
      best = i;
      best_ted = ted;
    }
  }
  return valid[best];
}

}  // namespace pyrepair
