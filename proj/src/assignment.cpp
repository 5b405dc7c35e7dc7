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

#include "pyrepair/assignment.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pyrepair/error.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/text.hpp"

namespace fs = std::filesystem;

namespace pyrepair {
namespace {

std::optional<std::size_t> numeric_suffix(const std::string& stem) {
  std::size_t i = stem.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(stem[i - 1]))) --i;
  if (i == stem.size()) return std::nullopt;
  return std::stoul(stem.substr(i));
}

std::vector<TestCase> load_tests(const fs::path& dir) {
  const fs::path tests_dir = dir / "tests";
  if (!fs::is_directory(tests_dir)) {
    throw LoadError(dir.string() + ": empty test suite (no tests/ directory)");
  }
  std::map<std::string, fs::path> inputs, outputs;
  for (const auto& entry : fs::directory_iterator(tests_dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    const auto stem = entry.path().stem().string();
    if (ext == ".in") inputs[stem] = entry.path();
    if (ext == ".out") outputs[stem] = entry.path();
  }
  for (const auto& [stem, p] : inputs) {
    if (!outputs.count(stem)) {
      throw LoadError(dir.string() + ": unpaired test file '" + stem +
                      "' (missing " + stem + ".out)");
    }
  }
  for (const auto& [stem, p] : outputs) {
    if (!inputs.count(stem)) {
      throw LoadError(dir.string() + ": unpaired test file '" + stem +
                      "' (missing " + stem + ".in)");
    }
  }
  if (inputs.empty()) {
    throw LoadError(dir.string() + ": empty test suite");
  }
  // std::map iterates stems in lexicographic order.
  std::vector<TestCase> tests;
  for (const auto& [stem, in_path] : inputs) {
    tests.push_back(TestCase{read_file(in_path.string()),
                             normalize(read_file(outputs[stem].string()))});
  }
  return tests;
}

std::vector<ProgramVersion> load_history(const fs::path& student_dir) {
  std::vector<ProgramVersion> versions;
  for (const auto& entry : fs::directory_iterator(student_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".py") continue;
    auto ordinal = numeric_suffix(entry.path().stem().string());
    if (!ordinal) {
      throw LoadError(entry.path().string() +
                      ": history file name has no numeric suffix");
    }
    versions.push_back(ProgramVersion{read_file(entry.path().string()), *ordinal});
  }
  std::sort(versions.begin(), versions.end(),
            [](const auto& a, const auto& b) { return a.ordinal < b.ordinal; });
  for (std::size_t i = 1; i < versions.size(); ++i) {
    if (versions[i].ordinal == versions[i - 1].ordinal) {
      throw LoadError(student_dir.string() + ": duplicate version ordinal " +
                      std::to_string(versions[i].ordinal));
    }
  }
  return versions;
}

}  // namespace

Assignment load_assignment(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw LoadError(dir.string() + ": not an assignment directory");
  }
  Assignment a;
  a.id = fs::absolute(dir).lexically_normal().filename().string();
  if (a.id.empty()) a.id = fs::absolute(dir).lexically_normal().parent_path().filename().string();

  const fs::path desc = dir / "description.txt";
  if (!fs::is_regular_file(desc)) {
    throw LoadError(dir.string() + ": missing description.txt");
  }
  a.description = read_file(desc.string());
  a.tests = load_tests(dir);

  if (fs::is_regular_file(dir / "reference.py")) {
    a.reference_solution = read_file((dir / "reference.py").string());
  }
  const fs::path history = dir / "history";
  if (fs::is_directory(history)) {
    for (const auto& entry : fs::directory_iterator(history)) {
      if (!entry.is_directory()) continue;
      auto versions = load_history(entry.path());
      if (!versions.empty()) {
        a.histories[entry.path().filename().string()] = std::move(versions);
      }
    }
  }
  return a;
}

void write_assignment(const Assignment& a, const fs::path& dir) {
  fs::create_directories(dir / "tests");
  write_file((dir / "description.txt").string(), a.description);
  if (a.reference_solution) {
    write_file((dir / "reference.py").string(), *a.reference_solution);
  }
  const int width = std::max<int>(3, static_cast<int>(std::to_string(a.tests.size()).size()));
  for (std::size_t i = 0; i < a.tests.size(); ++i) {
    std::string num = std::to_string(i + 1);
    std::string stem = "t" + std::string(static_cast<std::size_t>(width) - num.size(), '0') + num;
    write_file((dir / "tests" / (stem + ".in")).string(), a.tests[i].input);
    write_file((dir / "tests" / (stem + ".out")).string(), a.tests[i].expected_output);
  }
  for (const auto& [student, versions] : a.histories) {
    const fs::path sdir = dir / "history" / student;
    fs::create_directories(sdir);
    for (const auto& v : versions) {
      std::string num = std::to_string(v.ordinal);
      if (num.size() < 2) num.insert(0, 2 - num.size(), '0');
      write_file((sdir / ("v" + num + ".py")).string(), v.source);
    }
  }
}

std::vector<std::string> validate(const Assignment& a,
                                  const PythonOracle& oracle) {
  std::vector<std::string> warnings;
  if (a.histories.empty()) {
    warnings.push_back("few-shot unavailable: assignment has no submission histories");
  }
  std::set<std::string> seen_inputs;
  for (std::size_t i = 0; i < a.tests.size(); ++i) {
    if (!seen_inputs.insert(a.tests[i].input).second) {
      warnings.push_back("duplicate test: test " + std::to_string(i + 1) +
                         " repeats an earlier input");
    }
  }
  if (a.reference_solution) {
    auto verdict = oracle.check_syntax(*a.reference_solution);
    if (!verdict.ok()) {
      warnings.push_back("reference solution has a syntax error at line " +
                         std::to_string(verdict.first().line));
    } else {
      auto report = oracle.run_tests(*a.reference_solution, a.tests);
      for (std::size_t i = 0; i < report.per_test.size(); ++i) {
        if (report.vector.failures[i]) {
          warnings.push_back("reference solution fails test " +
                             std::to_string(i + 1) + " (" +
                             std::string(to_string(report.per_test[i].status)) + ")");
        }
      }
    }
  }
  return warnings;
}

}  // namespace pyrepair
