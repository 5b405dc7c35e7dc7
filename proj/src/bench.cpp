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

#include "pyrepair/bench.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "pyrepair/error.hpp"
#include "pyrepair/fewshot.hpp"
#include "pyrepair/text.hpp"
#include "pyrepair/tokens.hpp"

namespace fs = std::filesystem;

namespace pyrepair {
namespace {

BenchRecord summarize(std::string id, std::span<const Outcome* const> outcomes) {
  BenchRecord r;
  r.assignment_id = std::move(id);
  r.submissions = outcomes.size();
  std::vector<double> teds;
  for (const Outcome* o : outcomes) {
    if (o->status != RepairStatus::Repaired) continue;
    ++r.repaired;
    if (o->ted) teds.push_back(static_cast<double>(*o->ted));
  }
  r.repair_rate = r.submissions
                      ? 100.0 * static_cast<double>(r.repaired) / static_cast<double>(r.submissions)
                      : 0.0;
  if (!teds.empty()) {
    double sum = 0;
    for (double t : teds) sum += t;
    const double mean = sum / static_cast<double>(teds.size());
    double sq = 0;
    for (double t : teds) sq += (t - mean) * (t - mean);
    r.mean_ted = mean;
    r.sd_ted = teds.size() > 1 ? std::sqrt(sq / static_cast<double>(teds.size() - 1)) : 0.0;
  }
  return r;
}

std::string csv_number(const std::optional<double>& v) {
  return v ? fmt::format("{:.2f}", *v) : std::string("N/A");
}

}  // namespace

Dataset load_dataset(const fs::path& root) {
  const fs::path manifest = root / "manifest.json";
  if (!fs::is_regular_file(manifest)) {
    throw LoadError(root.string() + ": missing manifest.json");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(manifest.string()));
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(manifest.string() + ": " + e.what());
  }
  Dataset ds;
  ds.root = root;
  for (const auto& t : doc.at("targets")) {
    BenchTarget target{t.at("assignment").get<std::string>(),
                       t.at("student").get<std::string>(),
                       root / t.at("buggy").get<std::string>(),
                       root / t.at("correct").get<std::string>()};
    for (const auto& p : {target.buggy, target.correct}) {
      if (!fs::is_regular_file(p)) throw LoadError("manifest names missing file " + p.string());
    }
    if (!ds.assignments.count(target.assignment)) {
      ds.assignments.emplace(target.assignment, load_assignment(root / target.assignment));
    }
    ds.targets.push_back(std::move(target));
  }
  return ds;
}

BenchReport aggregate(std::span<const Outcome> outcomes) {
  BenchReport report;
  report.outcomes.assign(outcomes.begin(), outcomes.end());
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Outcome*>> groups;
  std::vector<const Outcome*> all;
  for (const auto& o : report.outcomes) {
    if (!groups.count(o.assignment)) order.push_back(o.assignment);
    groups[o.assignment].push_back(&o);
    all.push_back(&o);
  }
  for (const auto& id : order) report.rows.push_back(summarize(id, groups[id]));
  report.overall = summarize("Overall", all);
  return report;
}

std::string format_ted(const BenchRecord& r) {
  if (!r.mean_ted) return "N/A";
  return fmt::format("{:.2f} ({:.2f})", *r.mean_ted, r.sd_ted.value_or(0.0));
}

std::string format_table(const BenchReport& report) {
  std::size_t width = std::string("Assignment").size();
  for (const auto& r : report.rows) width = std::max(width, r.assignment_id.size());
  std::string out = fmt::format("{:<{}}  {:>6}  {:>15}  {:>16}\n", "Assignment", width,
                                "# Sub", "Repair rate (%)", "Mean TED (SD)");
  auto row = [&](const BenchRecord& r) {
    out += fmt::format("{:<{}}  {:>6}  {:>15.2f}  {:>16}\n", r.assignment_id, width,
                       r.submissions, r.repair_rate, format_ted(r));
  };
  for (const auto& r : report.rows) row(r);
  out += std::string(width + 45, '-') + "\n";
  row(report.overall);
  return out;
}

std::string format_csv(const BenchReport& report) {
  std::string out = "assignment,submissions,repaired,repair_rate,mean_ted,sd_ted\n";
  auto row = [&](const BenchRecord& r) {
    out += fmt::format("{},{},{},{:.2f},{},{}\n", r.assignment_id, r.submissions, r.repaired,
                       r.repair_rate, csv_number(r.mean_ted), csv_number(r.sd_ted));
  };
  for (const auto& r : report.rows) row(r);
  row(report.overall);
  return out;
}

namespace {

class BankCache {
 public:
  BankCache(const Dataset& ds, const PythonOracle& oracle) : ds_(ds), oracle_(oracle) {}
  const std::vector<BankEntry>& get(const std::string& assignment) {
    auto it = banks_.find(assignment);
    if (it == banks_.end()) {
      it = banks_.emplace(assignment, build_bank(ds_.assignments.at(assignment), oracle_)).first;
    }
    return it->second;
  }

 private:
  const Dataset& ds_;
  const PythonOracle& oracle_;
  std::map<std::string, std::vector<BankEntry>> banks_;
};

BenchReport run_with_cache(const Dataset& dataset, const PipelineConfig& config,
                           CompletionBackend& backend, const PythonOracle& oracle,
                           BankCache& banks, const ProgressFn& progress) {
  RepairEngine engine(backend, oracle, config);
  std::vector<Outcome> outcomes;
  for (const auto& target : dataset.targets) {
    Outcome o;
    o.assignment = target.assignment;
    o.student = target.student;
    try {
      const auto& assignment = dataset.assignments.at(target.assignment);
      RepairOptions opts;
      opts.student = target.student;
      if (config.use_few_shot) opts.bank = banks.get(target.assignment);
      auto result = engine.repair(read_file(target.buggy.string()), assignment, opts);
      o.status = result.status;
      if (result.status == RepairStatus::Repaired) o.ted = result.ted;
    } catch (const std::exception& e) {
      o.status = RepairStatus::Failed;
      o.error = e.what();
    }
    if (progress) progress(target, o);
    outcomes.push_back(std::move(o));
  }
  return aggregate(outcomes);
}

}  // namespace

BenchReport run_benchmark(const Dataset& dataset, const PipelineConfig& config,
                          CompletionBackend& backend, const PythonOracle& oracle,
                          const ProgressFn& progress) {
  BankCache banks(dataset, oracle);
  return run_with_cache(dataset, config, backend, oracle, banks, progress);
}

std::string_view to_string(AblationMode mode) {
  switch (mode) {
    case AblationMode::NoChunking: return "no-chunking";
    case AblationMode::NoIterative: return "no-iterative";
    case AblationMode::ZeroShot: return "zero-shot";
    case AblationMode::SingleStructure: return "single-structure";
  }
  return "no-chunking";
}

AblationMode parse_ablation_mode(std::string_view name) {
  for (auto m : {AblationMode::NoChunking, AblationMode::NoIterative, AblationMode::ZeroShot,
                 AblationMode::SingleStructure}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown ablation mode '" + std::string(name) + "'");
}

AblationReport run_ablation(const Dataset& dataset, AblationMode mode,
                            const PipelineConfig& config, CompletionBackend& backend,
                            const PythonOracle& oracle) {
  BankCache banks(dataset, oracle);
  AblationReport report{mode, {}};
  PipelineConfig full = config;
  if (mode == AblationMode::ZeroShot) full.use_few_shot = true;
  if (mode == AblationMode::SingleStructure) full.prompt_structures.clear();

  const char* full_label = mode == AblationMode::SingleStructure ? "ensemble" : "full";
  report.columns.push_back(
      {full_label, run_with_cache(dataset, full, backend, oracle, banks, {})});

  auto ablated = [&](std::string label, PipelineConfig c) {
    report.columns.push_back(
        {std::move(label), run_with_cache(dataset, c, backend, oracle, banks, {})});
  };
  switch (mode) {
    case AblationMode::NoChunking: {
      PipelineConfig c = full;
      c.use_chunking = false;
      ablated("no-chunking", c);
      break;
    }
    case AblationMode::NoIterative: {
      PipelineConfig c = full;
      c.use_iterative = false;
      ablated("no-iterative", c);
      break;
    }
    case AblationMode::ZeroShot: {
      PipelineConfig c = full;
      c.use_few_shot = false;
      ablated("zero-shot", c);
      break;
    }
    case AblationMode::SingleStructure:
      for (auto s : kSemanticStructures) {
        PipelineConfig c = full;
        c.prompt_structures = {s};
        ablated(s.name(), c);
      }
      break;
  }
  return report;
}

std::string format_ablation(const AblationReport& report) {
  std::string out = fmt::format("Ablation: {}\n", to_string(report.mode));
  if (report.columns.empty()) return out;
  std::size_t width = std::string("Assignment").size();
  for (const auto& r : report.columns.front().report.rows) {
    width = std::max(width, r.assignment_id.size());
  }
  out += fmt::format("{:<{}}", "Assignment", width);
  for (const auto& c : report.columns) out += fmt::format("  | {:^26}", c.label);
  out += "\n" + fmt::format("{:<{}}", "", width);
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    out += fmt::format("  | {:>8} {:>17}", "RR (%)", "Mean TED (SD)");
  }
  out += "\n";
  auto line = [&](std::size_t row) {
    const auto& first = row < report.columns.front().report.rows.size()
                            ? report.columns.front().report.rows[row]
                            : report.columns.front().report.overall;
    out += fmt::format("{:<{}}", first.assignment_id, width);
    for (const auto& c : report.columns) {
      const auto& r = row < c.report.rows.size() ? c.report.rows[row] : c.report.overall;
      out += fmt::format("  | {:>8.2f} {:>17}", r.repair_rate, format_ted(r));
    }
    out += "\n";
  };
  const std::size_t rows = report.columns.front().report.rows.size();
  for (std::size_t i = 0; i < rows; ++i) line(i);
  line(rows);
  return out;
}

}  // namespace pyrepair
