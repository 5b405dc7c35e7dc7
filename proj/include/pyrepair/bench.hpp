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

#ifndef PYREPAIR_BENCH_HPP_
#define PYREPAIR_BENCH_HPP_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pyrepair/assignment.hpp"
#include "pyrepair/gateway.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/pipeline.hpp"

namespace pyrepair {

struct BenchTarget {
  std::string assignment;
  std::string student;
  std::filesystem::path buggy;
  std::filesystem::path correct;
};

/// A benchmark dataset: assignment directories plus a manifest naming the
/// buggy target programs and their ground-truth fixes.
///
///   <root>/manifest.json
///     { "targets": [ { "assignment": "reverse_sum", "student": "s07",
///                      "buggy": "reverse_sum/targets/s07_buggy.py",
///                      "correct": "reverse_sum/targets/s07_correct.py" } ] }
///
/// Paths are relative to <root>; "assignment" names a directory under it.
struct Dataset {
  std::filesystem::path root;
  std::vector<BenchTarget> targets;
  std::map<std::string, Assignment> assignments;
};

Dataset load_dataset(const std::filesystem::path& root);

struct Outcome {
  std::string assignment;
  std::string student;
  RepairStatus status = RepairStatus::Failed;
  std::optional<std::size_t> ted;  // only for repaired programs
  std::string error;               // set when the run aborted
};

struct BenchRecord {
  std::string assignment_id;
  std::size_t submissions = 0;
  std::size_t repaired = 0;
  double repair_rate = 0;  // percent
  std::optional<double> mean_ted;  // over repaired programs; none if zero
  std::optional<double> sd_ted;    // sample SD; 0 for a single program
};

struct BenchReport {
  std::vector<BenchRecord> rows;  // assignments in first-seen order
  BenchRecord overall;            // pooled over all programs
  std::vector<Outcome> outcomes;
};

/// Per-assignment and pooled statistics for a list of outcomes.
BenchReport aggregate(std::span<const Outcome> outcomes);

/// "12.50 (3.54)", or "N/A" when nothing was repaired.
std::string format_ted(const BenchRecord& record);
std::string format_table(const BenchReport& report);
std::string format_csv(const BenchReport& report);

using ProgressFn = std::function<void(const BenchTarget&, const Outcome&)>;

/// Repairs every target. Failures of individual runs are recorded in the
/// outcome, never thrown.
BenchReport run_benchmark(const Dataset& dataset, const PipelineConfig& config,
                          CompletionBackend& backend, const PythonOracle& oracle,
                          const ProgressFn& progress = {});

enum class AblationMode { NoChunking, NoIterative, ZeroShot, SingleStructure };

std::string_view to_string(AblationMode mode);
/// Accepts no-chunking, no-iterative, zero-shot, single-structure.
AblationMode parse_ablation_mode(std::string_view name);

struct AblationColumn {
  std::string label;
  BenchReport report;
};

struct AblationReport {
  AblationMode mode;
  std::vector<AblationColumn> columns;  // full configuration first
};

/// Runs the full configuration and the ablated one(s) over the dataset. In
/// single-structure mode there is one column per semantic structure.
AblationReport run_ablation(const Dataset& dataset, AblationMode mode,
                            const PipelineConfig& config, CompletionBackend& backend,
                            const PythonOracle& oracle);

std::string format_ablation(const AblationReport& report);

}  // namespace pyrepair

#endif  // PYREPAIR_BENCH_HPP_
