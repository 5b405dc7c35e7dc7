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

// Command-line front end: repair, bench, ablate.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pyrepair/assignment.hpp"
#include "pyrepair/bench.hpp"
#include "pyrepair/error.hpp"
#include "pyrepair/gateway.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/pipeline.hpp"
#include "pyrepair/text.hpp"

namespace fs = std::filesystem;
using namespace pyrepair;

namespace {

constexpr int kExitError = 1;

struct CommonFlags {
  bool few_shot = false;
  bool no_chunking = false;
  bool no_iterative = false;
  std::string structures;
  std::string backend = "http";
  std::string endpoint;
  std::string model;
  std::string record;
  double temperature = 0.8;
  std::size_t samples = 10;
  double timeout_s = 10.0;
  std::size_t max_iterations = 2;
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--few-shot", f.few_shot, "Add peer example pairs to semantic prompts");
  cmd->add_flag("--no-chunking", f.no_chunking, "Send the whole program in syntax prompts");
  cmd->add_flag("--no-iterative", f.no_iterative, "Allow a single syntax round only");
  cmd->add_option("--structures", f.structures,
                  "Comma-separated semantic prompt structures, e.g. p+dg,p+ds+t");
  cmd->add_option("--backend", f.backend,
                  "http | mock:<fixtures.json> | scripted:<rules.json>")
      ->capture_default_str();
  cmd->add_option("--endpoint", f.endpoint, "Completions endpoint URL (http backend)");
  cmd->add_option("--model", f.model, "Model name (http backend)");
  cmd->add_option("--record", f.record, "Save every completion to this fixture file");
  cmd->add_option("--temperature", f.temperature, "Sampling temperature")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 2.0));
  cmd->add_option("--samples", f.samples, "Generations per prompt")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", f.timeout_s, "Per-test time limit in seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-syntax-iterations", f.max_iterations, "Syntax rounds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("-v,--verbose", f.verbose, "Print the repair trace to stderr");
}

PipelineConfig make_config(const CommonFlags& f) {
  PipelineConfig c;
  c.use_few_shot = f.few_shot;
  c.use_chunking = !f.no_chunking;
  c.use_iterative = !f.no_iterative;
  c.max_syntax_iterations = f.max_iterations;
  c.gen_params.temperature = f.temperature;
  c.gen_params.samples_per_prompt = f.samples;
  if (!f.structures.empty()) {
    std::stringstream in(f.structures);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!trim(item).empty()) c.prompt_structures.push_back(Structure::parse(trim(item)));
    }
  }
  return c;
}

OracleConfig make_oracle_config(const CommonFlags& f) {
  OracleConfig c;
  c.per_test_timeout = std::chrono::milliseconds(static_cast<long>(f.timeout_s * 1000));
  return c;
}

/// Owns the selected backend and an optional recorder around it.
class Backends {
 public:
  explicit Backends(const CommonFlags& f) {
    const std::string& choice = f.backend;
    if (choice.rfind("mock:", 0) == 0) {
      base_ = std::make_unique<MockBackend>(fs::path(choice.substr(5)));
    } else if (choice.rfind("scripted:", 0) == 0) {
      base_ = std::make_unique<ScriptedBackend>(ScriptedBackend::from_file(choice.substr(9)));
    } else if (choice == "http") {
      HttpConfig hc = HttpConfig::from_env();
      if (!f.endpoint.empty()) hc.endpoint = f.endpoint;
      if (!f.model.empty()) hc.model = f.model;
      base_ = std::make_unique<HttpBackend>(hc);
    } else {
      throw Error("unknown backend '" + choice + "'");
    }
    if (!f.record.empty()) {
      recorder_ = std::make_unique<RecordingBackend>(*base_);
      record_path_ = f.record;
    }
  }
  CompletionBackend& get() { return recorder_ ? *recorder_ : *base_; }
  void flush() const {
    if (recorder_) recorder_->save(record_path_);
  }

 private:
  std::unique_ptr<CompletionBackend> base_;
  std::unique_ptr<RecordingBackend> recorder_;
  fs::path record_path_;
};

void print_trace(const std::vector<TraceEntry>& trace, std::ostream& out) {
  for (const auto& e : trace) {
    out << "[" << to_string(e.phase) << " #" << e.iteration << "] prompts=" << e.prompts_issued
        << " generations=" << e.generations << " kept=" << e.kept;
    if (!e.note.empty()) out << " (" << e.note << ")";
    out << "\n";
    for (const auto& d : e.discarded) out << "    discarded: " << d << "\n";
  }
}

int exit_code(RepairStatus s) {
  switch (s) {
    case RepairStatus::Repaired: return 0;
    case RepairStatus::SyntaxFixedOnly: return 2;
    case RepairStatus::Failed: return 3;
  }
  return 3;
}

int run_repair(const std::string& file, const std::string& assignment_dir,
               const std::string& student, const CommonFlags& f) {
  Assignment assignment = load_assignment(assignment_dir);
  const std::string program = read_file(file);
  PythonOracle oracle(make_oracle_config(f));
  Backends backends(f);
  RepairEngine engine(backends.get(), oracle, make_config(f));

  std::vector<BankEntry> bank;
  RepairOptions opts;
  if (!student.empty()) opts.student = student;
  if (f.few_shot) {
    bank = build_bank(assignment, oracle);
    opts.bank = bank;
  }

  RepairResult result;
  try {
    result = engine.repair(program, assignment, opts);
  } catch (const PipelineError& e) {
    backends.flush();
    if (f.verbose) print_trace(e.trace(), std::cerr);
    throw;
  }
  backends.flush();

  std::cout << "# status: " << to_string(result.status) << "\n";
  if (result.ted) std::cout << "# ted: " << *result.ted << "\n";
  std::cout << "# model calls: " << result.model_calls() << "\n";
  if (result.program) std::cout << *result.program;
  if (f.verbose) print_trace(result.trace, std::cerr);
  return exit_code(result.status);
}

int run_bench(const std::string& dataset_dir, const std::string& out_csv,
              const CommonFlags& f) {
  Dataset dataset = load_dataset(dataset_dir);
  PythonOracle oracle(make_oracle_config(f));
  Backends backends(f);
  ProgressFn progress;
  if (f.verbose) {
    progress = [](const BenchTarget& t, const Outcome& o) {
      std::cerr << t.assignment << "/" << t.student << ": " << to_string(o.status);
      if (o.ted) std::cerr << " ted=" << *o.ted;
      if (!o.error.empty()) std::cerr << " error: " << o.error;
      std::cerr << "\n";
    };
  }
  BenchReport report = run_benchmark(dataset, make_config(f), backends.get(), oracle, progress);
  backends.flush();
  std::cout << format_table(report);
  if (!out_csv.empty()) write_file(out_csv, format_csv(report));
  return 0;
}

int run_ablate(const std::string& dataset_dir, const std::string& mode, const CommonFlags& f) {
  Dataset dataset = load_dataset(dataset_dir);
  PythonOracle oracle(make_oracle_config(f));
  Backends backends(f);
  AblationReport report =
      run_ablation(dataset, parse_ablation_mode(mode), make_config(f), backends.get(), oracle);
  backends.flush();
  std::cout << format_ablation(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repair introductory Python programs with a code completion model"};
  app.require_subcommand(1);

  CommonFlags repair_flags, bench_flags, ablate_flags;
  std::string file, assignment_dir, student, bench_dir, out_csv, ablate_dir, mode;

  auto* repair = app.add_subcommand("repair", "Repair one program");
  repair->add_option("file", file, "Buggy program")->required()->check(CLI::ExistingFile);
  repair->add_option("--assignment", assignment_dir, "Assignment directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  repair->add_option("--student", student, "Exclude this student's history from shots");
  add_common(repair, repair_flags);

  auto* bench = app.add_subcommand("bench", "Repair every target of a dataset");
  bench->add_option("dataset", bench_dir, "Dataset directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  bench->add_option("--out", out_csv, "Also write the report as CSV");
  add_common(bench, bench_flags);

  auto* ablate = app.add_subcommand("ablate", "Compare the full configuration to an ablation");
  ablate->add_option("dataset", ablate_dir, "Dataset directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  ablate->add_option("--mode", mode, "no-chunking | no-iterative | zero-shot | single-structure")
      ->required()
      ->check(CLI::IsMember({"no-chunking", "no-iterative", "zero-shot", "single-structure"}));
  add_common(ablate, ablate_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*repair) return run_repair(file, assignment_dir, student, repair_flags);
    if (*bench) return run_bench(bench_dir, out_csv, bench_flags);
    if (*ablate) return run_ablate(ablate_dir, mode, ablate_flags);
  } catch (const std::exception& e) {
    std::cerr << "pyrepair: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
