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

#ifndef PYREPAIR_ORACLES_HPP_
#define PYREPAIR_ORACLES_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyrepair/assignment.hpp"

namespace pyrepair {

enum class DiagnosticKind { SyntaxError, IndentationError, TabError, Other };

std::string_view to_string(DiagnosticKind kind);

/// A single interpreter-reported syntax problem.
struct Diagnostic {
  std::size_t line = 1;               // 1-based
  std::optional<std::size_t> column;  // 1-based, within the source line
  DiagnosticKind kind = DiagnosticKind::SyntaxError;
  std::string message;
  std::string raw;  // the complete block as the interpreter printed it

  bool operator==(const Diagnostic&) const = default;
};

/// Result of the syntax oracle. Interpreters stop at the first syntax
/// error, so at most one diagnostic is ever present.
struct SyntaxVerdict {
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  const Diagnostic& first() const { return diagnostics.front(); }
};

/// Per-test failure bits; true means the test failed.
struct TestVector {
  std::vector<bool> failures;

  std::size_t size() const { return failures.size(); }
  bool all_passed() const;
  std::size_t failure_count() const;
  bool operator==(const TestVector&) const = default;
};

enum class TestStatus { Pass, WrongOutput, RuntimeException, Timeout };

std::string_view to_string(TestStatus status);

struct TestOutcome {
  TestStatus status = TestStatus::Pass;
  std::string actual_output;
  std::string error_output;  // captured stderr, for diagnostics
};

struct TestReport {
  TestVector vector;
  std::vector<TestOutcome> per_test;

  bool all_passed() const { return vector.all_passed(); }
  /// Index of the first non-passing test, if any.
  std::optional<std::size_t> first_failure() const;
};

/// Strips trailing whitespace from every line and drops trailing blank
/// lines. Interior spacing and case are untouched.
std::string normalize(std::string_view output);

/// Parses an interpreter syntax-error block:
///
///     File "<unknown>", line 2
///       a = n
///       ^
///   IndentationError: expected an indented block
///
/// `source` is used to clamp the line and to translate the caret into a
/// column of the original (unstripped) source line.
Diagnostic parse_diagnostic(std::string_view raw, std::string_view source);

struct OracleConfig {
  /// Interpreter executable; defaults to $PYREPAIR_PYTHON or "python3".
  std::string interpreter = default_interpreter();
  std::chrono::milliseconds per_test_timeout{10'000};
  /// Concurrent test executions per report; 0 picks the hardware count.
  std::size_t parallelism = 0;

  static std::string default_interpreter();
};

/// Syntax and semantic oracles backed by a Python interpreter.
class PythonOracle {
 public:
  explicit PythonOracle(OracleConfig config = {});

  /// Runs the interpreter's compile step on `source`.
  /// Throws EnvironmentError if the interpreter cannot be executed.
  SyntaxVerdict check_syntax(std::string_view source) const;

  /// Executes `source` once per test in a fresh working directory.
  TestReport run_tests(std::string_view source,
                       std::span<const TestCase> tests) const;

  const OracleConfig& config() const { return config_; }

 private:
  TestOutcome run_one(std::string_view source, const TestCase& test) const;

  OracleConfig config_;
};

}  // namespace pyrepair

#endif  // PYREPAIR_ORACLES_HPP_
