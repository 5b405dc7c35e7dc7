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

#include "pyrepair/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <regex>
#include <thread>

#include "pyrepair/error.hpp"
#include "pyrepair/subprocess.hpp"
#include "pyrepair/text.hpp"

namespace pyrepair {
namespace {

constexpr const char* kCompileScript = R"(import sys, traceback
src = sys.stdin.buffer.read().decode('utf-8', 'replace')
try:
    compile(src, '<unknown>', 'exec')
except (SyntaxError, ValueError) as e:
    sys.stderr.write(''.join(traceback.format_exception_only(type(e), e)))
    sys.exit(1)
)";

const std::vector<std::string> kChildEnv = {
    "PYTHONHASHSEED=0", "PYTHONDONTWRITEBYTECODE=1", "PYTHONIOENCODING=utf-8"};

DiagnosticKind kind_from_name(std::string_view name) {
  if (name == "IndentationError") return DiagnosticKind::IndentationError;
  if (name == "TabError") return DiagnosticKind::TabError;
  if (name == "SyntaxError") return DiagnosticKind::SyntaxError;
  return DiagnosticKind::Other;
}

std::size_t leading_spaces(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return i;
}

}  // namespace

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::SyntaxError: return "syntax-error";
    case DiagnosticKind::IndentationError: return "indentation-error";
    case DiagnosticKind::TabError: return "tab-error";
    case DiagnosticKind::Other: return "other";
  }
  return "other";
}

std::string_view to_string(TestStatus status) {
  switch (status) {
    case TestStatus::Pass: return "pass";
    case TestStatus::WrongOutput: return "wrong-output";
    case TestStatus::RuntimeException: return "runtime-exception";
    case TestStatus::Timeout: return "timeout";
  }
  return "pass";
}

bool TestVector::all_passed() const {
  return std::none_of(failures.begin(), failures.end(),
                      [](bool f) { return f; });
}

std::size_t TestVector::failure_count() const {
  return static_cast<std::size_t>(
      std::count(failures.begin(), failures.end(), true));
}

std::optional<std::size_t> TestReport::first_failure() const {
  for (std::size_t i = 0; i < vector.failures.size(); ++i) {
    if (vector.failures[i]) return i;
  }
  return std::nullopt;
}

std::string normalize(std::string_view output) {
  auto lines = split_lines(output);
  for (auto& line : lines) {
    line = std::string(rtrim(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return join_lines(lines);
}

Diagnostic parse_diagnostic(std::string_view raw, std::string_view source) {
  static const std::regex header(R"(File "[^"]*",\s*line\s+(\d+))");
  static const std::regex tail(R"(^([A-Za-z_][A-Za-z0-9_]*)(?::\s?(.*))?$)");

  Diagnostic diag;
  diag.raw = std::string(raw);
  const auto raw_lines = split_lines(raw);
  const auto src_lines = split_lines(source);

  std::optional<std::size_t> header_at;
  for (std::size_t i = 0; i < raw_lines.size(); ++i) {
    std::smatch m;
    if (std::regex_search(raw_lines[i], m, header)) {
      diag.line = std::stoul(m[1].str());
      header_at = i;
    }
  }

  for (auto it = raw_lines.rbegin(); it != raw_lines.rend(); ++it) {
    std::string line(trim(*it));
    if (line.empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, tail)) {
      diag.kind = kind_from_name(m[1].str());
      diag.message = m[2].matched ? m[2].str() : std::string();
    } else {
      diag.message = line;
      diag.kind = DiagnosticKind::Other;
    }
    break;
  }

  const std::size_t max_line = src_lines.size() + 1;
  diag.line = std::clamp<std::size_t>(diag.line, 1, max_line);

  // Caret line: only blanks and ^ / ~, directly below the echoed code line.
  if (header_at) {
    for (std::size_t i = *header_at + 2; i < raw_lines.size(); ++i) {
      const auto& caret = raw_lines[i];
      auto pos = caret.find('^');
      if (pos == std::string::npos ||
          caret.find_first_not_of(" \t^~") != std::string::npos) {
        continue;
      }
      const auto& echoed = raw_lines[i - 1];
      const std::size_t echo_indent = leading_spaces(echoed);
      if (pos < echo_indent) break;
      std::size_t src_indent = 0;
      if (diag.line <= src_lines.size()) {
        src_indent = leading_spaces(src_lines[diag.line - 1]);
      }
      diag.column = pos - echo_indent + src_indent + 1;
      break;
    }
  }
  return diag;
}

std::string OracleConfig::default_interpreter() {
  if (const char* env = std::getenv("PYREPAIR_PYTHON"); env && *env) {
    return env;
  }
  return "python3";
}

PythonOracle::PythonOracle(OracleConfig config) : config_(std::move(config)) {}

SyntaxVerdict PythonOracle::check_syntax(std::string_view source) const {
  ProcessOptions opts;
  opts.timeout = std::chrono::seconds(30);
  opts.extra_env = kChildEnv;
  auto res = run_process({config_.interpreter, "-c", kCompileScript}, source,
                         opts);
  SyntaxVerdict verdict;
  if (res.succeeded()) return verdict;
  if (res.timed_out || res.term_signal != 0 || res.exit_code != 1 ||
      res.err.empty()) {
    throw EnvironmentError("syntax check failed to run under '" +
                           config_.interpreter + "': " + res.err);
  }
  verdict.diagnostics.push_back(parse_diagnostic(res.err, source));
  return verdict;
}

TestOutcome PythonOracle::run_one(std::string_view source,
                                  const TestCase& test) const {
  TempDir dir("pyrepair-run");
  {
    std::ofstream f(dir.path() / "main.py", std::ios::binary);
    f.write(source.data(), static_cast<std::streamsize>(source.size()));
  }
  ProcessOptions opts;
  opts.cwd = dir.path();
  opts.timeout = config_.per_test_timeout;
  opts.extra_env = kChildEnv;
  auto res = run_process({config_.interpreter, "main.py"}, test.input, opts);

  TestOutcome outcome;
  outcome.actual_output = std::move(res.out);
  outcome.error_output = std::move(res.err);
  if (res.timed_out) {
    outcome.status = TestStatus::Timeout;
  } else if (!res.succeeded()) {
    outcome.status = TestStatus::RuntimeException;
  } else if (normalize(outcome.actual_output) !=
             normalize(test.expected_output)) {
    outcome.status = TestStatus::WrongOutput;
  } else {
    outcome.status = TestStatus::Pass;
  }
  return outcome;
}

TestReport PythonOracle::run_tests(std::string_view source,
                                   std::span<const TestCase> tests) const {
  TestReport report;
  report.per_test.resize(tests.size());
  std::size_t width = config_.parallelism;
  if (width == 0) width = std::max(1u, std::thread::hardware_concurrency());

  for (std::size_t begin = 0; begin < tests.size(); begin += width) {
    const std::size_t end = std::min(tests.size(), begin + width);
    std::vector<std::future<TestOutcome>> batch;
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, [this, source, &tests, i] {
        return run_one(source, tests[i]);
      }));
    }
    for (std::size_t i = begin; i < end; ++i) {
      report.per_test[i] = batch[i - begin].get();
    }
  }
  report.vector.failures.reserve(tests.size());
  for (const auto& t : report.per_test) {
    report.vector.failures.push_back(t.status != TestStatus::Pass);
  }
  return report;
}

}  // namespace pyrepair
