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

#ifndef PYREPAIR_PIPELINE_HPP_
#define PYREPAIR_PIPELINE_HPP_

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyrepair/assignment.hpp"
#include "pyrepair/error.hpp"
#include "pyrepair/fewshot.hpp"
#include "pyrepair/gateway.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/prompts.hpp"

namespace pyrepair {

enum class Phase { Syntax, Semantic };
std::string_view to_string(Phase phase);

struct Candidate {
  std::string source;
  Phase phase = Phase::Syntax;
  std::string prompt_structure;  // provenance: prompt kind or structure name
  std::optional<double> mean_logprob;
  std::size_t iteration = 0;
};

/// One step of a repair: a syntax round, or the semantic pass over one
/// syntax-phase candidate.
struct TraceEntry {
  Phase phase = Phase::Syntax;
  std::size_t iteration = 0;
  std::size_t prompts_issued = 0;
  std::size_t generations = 0;
  std::size_t kept = 0;
  std::vector<std::string> discarded;  // one reason per discarded generation
  std::string note;
};

enum class RepairStatus { Repaired, SyntaxFixedOnly, Failed };
std::string_view to_string(RepairStatus status);

struct RepairResult {
  RepairStatus status = RepairStatus::Failed;
  std::optional<std::string> program;
  std::optional<std::size_t> ted;  // to the original program
  std::vector<TraceEntry> trace;

  std::size_t model_calls() const;
};

struct PipelineConfig {
  bool use_few_shot = false;
  bool use_chunking = true;
  bool use_iterative = true;
  std::size_t max_syntax_iterations = 2;
  /// Semantic structures to issue; empty means all six.
  std::vector<Structure> prompt_structures;
  GenParams gen_params;
  /// Generations kept per prompt, and syntax candidates passed on.
  std::size_t top_k = 10;
  std::size_t shots = 3;
};

/// Per-run context that is not configuration.
struct RepairOptions {
  std::span<const BankEntry> bank;
  /// The student under repair; their own history is never used as a shot.
  std::optional<std::string> student;
};

/// Backend or environment failure in the middle of a repair. Carries the
/// trace collected up to that point.
class PipelineError : public Error {
 public:
  PipelineError(const std::string& what, std::vector<TraceEntry> trace,
                std::exception_ptr cause)
      : Error(what), trace_(std::move(trace)), cause_(std::move(cause)) {}
  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::exception_ptr cause() const { return cause_; }

 private:
  std::vector<TraceEntry> trace_;
  std::exception_ptr cause_;
};

/// Syntax phase, then semantic phase, then min-TED selection.
class RepairEngine {
 public:
  RepairEngine(CompletionBackend& backend, const PythonOracle& oracle,
               PipelineConfig config);

  RepairResult repair(std::string_view program, const Assignment& assignment,
                      const RepairOptions& options = {});

  /// Candidates (deduplicated, best first) that pass the syntax oracle.
  /// `program` must fail the syntax oracle.
  std::vector<Candidate> syntax_phase(std::string_view program,
                                      std::vector<TraceEntry>* trace = nullptr);

  /// Candidates that pass every test: inputs that already do, plus
  /// validated generations.
  std::vector<Candidate> semantic_phase(std::span<const Candidate> candidates,
                                        const Assignment& assignment,
                                        const RepairOptions& options = {},
                                        std::vector<TraceEntry>* trace = nullptr);

  const PipelineConfig& config() const { return config_; }

 private:
  std::vector<std::vector<Generation>> complete_all(std::span<const Prompt> prompts);
  std::span<const Structure> structures() const;

  CompletionBackend& backend_;
  const PythonOracle& oracle_;
  PipelineConfig config_;
};

/// Minimum token edit distance to `original`; ties go to the higher mean
/// log probability, then to the earlier candidate. `valid` must be non-empty.
const Candidate& select_final(std::span<const Candidate> valid,
                              std::string_view original);

}  // namespace pyrepair

#endif  // PYREPAIR_PIPELINE_HPP_
