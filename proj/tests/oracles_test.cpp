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

#include <gtest/gtest.h>

#include <chrono>

#include "pyrepair/error.hpp"
#include "support.hpp"

namespace pyrepair {
namespace {

using namespace std::chrono_literals;

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("Sum: 77\n"), "Sum: 77");
  EXPECT_EQ(normalize("a \nb\n\n"), "a\nb");
  EXPECT_EQ(normalize("A B"), "A B");
  EXPECT_EQ(normalize("  x\t\r\n\n  \n"), "  x");
  EXPECT_EQ(normalize(""), "");
}

TEST(Normalize, Idempotent) {
  for (std::string s : {"a \n\n b \n", "\n\n", "x\r\ny  ", "  lead"}) {
    EXPECT_EQ(normalize(normalize(s)), normalize(s));
  }
}

TEST(ParseDiagnostic, IndentationError) {
  const std::string raw =
      "  File \"<unknown>\", line 2\n"
      "    a = n\n"
      "    ^\n"
      "IndentationError: expected an indented block after 'while' statement on line 1\n";
  Diagnostic d = parse_diagnostic(raw, testing::kWhileNoIndent);
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.kind, DiagnosticKind::IndentationError);
  EXPECT_EQ(d.message, "expected an indented block after 'while' statement on line 1");
  EXPECT_EQ(d.column, 1u);
  EXPECT_EQ(d.raw, raw);
}

TEST(ParseDiagnostic, CaretColumnMapsToSourceIndentation) {
  const std::string source = "if x:\n        y = (1 +\n";
  const std::string raw =
      "  File \"<unknown>\", line 2\n"
      "    y = (1 +\n"
      "        ^\n"
      "SyntaxError: '(' was never closed\n";
  Diagnostic d = parse_diagnostic(raw, source);
  EXPECT_EQ(d.line, 2u);
  EXPECT_EQ(d.column, 13u);
  EXPECT_EQ(d.kind, DiagnosticKind::SyntaxError);
}

TEST(ParseDiagnostic, LineClampedToSourceLengthPlusOne) {
  const std::string raw = "  File \"<unknown>\", line 99\nSyntaxError: unexpected EOF\n";
  Diagnostic d = parse_diagnostic(raw, "a\nb\n");
  EXPECT_EQ(d.line, 3u);
  EXPECT_FALSE(d.column);
}

TEST(ParseDiagnostic, UnknownShapeIsOther) {
  Diagnostic d = parse_diagnostic("something odd happened\n", "x\n");
  EXPECT_EQ(d.line, 1u);
  EXPECT_EQ(d.kind, DiagnosticKind::Other);
  EXPECT_EQ(d.message, "something odd happened");
}

TEST(DiagnosticKindNames, Strings) {
  EXPECT_EQ(to_string(DiagnosticKind::SyntaxError), "syntax-error");
  EXPECT_EQ(to_string(DiagnosticKind::IndentationError), "indentation-error");
  EXPECT_EQ(to_string(DiagnosticKind::TabError), "tab-error");
  EXPECT_EQ(to_string(TestStatus::RuntimeException), "runtime-exception");
}

class OracleTest : public ::testing::Test {
 protected:
  PythonOracle oracle_;
  static OracleConfig fast() {
    OracleConfig c;
    c.per_test_timeout = 1s;
    return c;
  }
};

TEST_F(OracleTest, AcceptsValidSource) {
  EXPECT_TRUE(oracle_.check_syntax("print(1)").ok());
  EXPECT_TRUE(oracle_.check_syntax("").ok());
}

TEST_F(OracleTest, WhileWithoutIndentedBody) {
  auto v = oracle_.check_syntax("while (n > 0):\na = n");
  ASSERT_FALSE(v.ok());
  ASSERT_EQ(v.diagnostics.size(), 1u);
  EXPECT_EQ(v.first().line, 2u);
  EXPECT_EQ(v.first().kind, DiagnosticKind::IndentationError);
  EXPECT_NE(v.first().raw.find("expected an indented block"), std::string::npos);
  EXPECT_NE(v.first().raw.find("File \"<unknown>\", line 2"), std::string::npos);
}

TEST_F(OracleTest, AssignmentInElifCondition) {
  auto v = oracle_.check_syntax(testing::slurp(testing::data_dir() / "prime_pair" / "buggy.py"));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.first().line, 30u);
  EXPECT_EQ(v.first().kind, DiagnosticKind::SyntaxError);
}

TEST_F(OracleTest, OnlyFirstErrorReported) {
  auto v = oracle_.check_syntax(testing::slurp(testing::data_dir() / "label_total" / "buggy.py"));
  ASSERT_EQ(v.diagnostics.size(), 1u);
  EXPECT_EQ(v.first().line, 3u);
  EXPECT_EQ(v.first().message, "expected ':'");
}

TEST_F(OracleTest, TabError) {
  auto v = oracle_.check_syntax("if x:\n        a = 1\n\tb = 2\n");
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.first().kind, DiagnosticKind::TabError);
  EXPECT_EQ(v.first().line, 3u);
}

TEST(OracleEnvironment, MissingInterpreterThrows) {
  OracleConfig c;
  c.interpreter = "pyrepair-missing-python";
  PythonOracle oracle(c);
  EXPECT_THROW(oracle.check_syntax("x = 1"), EnvironmentError);
}

TEST_F(OracleTest, ReverseSumPasses) {
  Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  auto report = oracle_.run_tests(*a.reference_solution, a.tests);
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.vector.failures, (std::vector<bool>{false, false}));
  EXPECT_EQ(report.per_test[0].actual_output, "Reverse: 34\nSum: 77\n");
  EXPECT_FALSE(report.first_failure());
}

TEST_F(OracleTest, WrongOutputOnOneTest) {
  Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  auto report = oracle_.run_tests(a.histories.at("s01")[0].source, a.tests);
  EXPECT_EQ(report.vector.failures, (std::vector<bool>{false, true}));
  EXPECT_EQ(report.per_test[1].status, TestStatus::WrongOutput);
  EXPECT_EQ(report.per_test[1].actual_output, "Reverse: 005\nSum: 505\n");
  EXPECT_EQ(report.first_failure(), 1u);
}

TEST_F(OracleTest, NameErrorIsRuntimeException) {
  Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  auto report = oracle_.run_tests("print(undefined_name)\n", a.tests);
  EXPECT_EQ(report.vector.failures, (std::vector<bool>{true, true}));
  for (const auto& t : report.per_test) {
    EXPECT_EQ(t.status, TestStatus::RuntimeException);
    EXPECT_NE(t.error_output.find("NameError"), std::string::npos);
  }
}

TEST_F(OracleTest, NonzeroExitIsRuntimeExceptionEvenWithRightOutput) {
  std::vector<TestCase> tests = {{"", "ok"}};
  auto report = oracle_.run_tests("print('ok')\nraise SystemExit(4)\n", tests);
  EXPECT_EQ(report.per_test[0].status, TestStatus::RuntimeException);
}

TEST_F(OracleTest, InfiniteLoopTimesOut) {
  PythonOracle oracle(fast());
  std::vector<TestCase> tests = {{"", "x"}, {"", "y"}};
  const auto t0 = std::chrono::steady_clock::now();
  auto report = oracle.run_tests("while True: pass\n", tests);
  EXPECT_LT(std::chrono::steady_clock::now() - t0, 5s);
  EXPECT_EQ(report.per_test[0].status, TestStatus::Timeout);
  EXPECT_EQ(report.per_test[1].status, TestStatus::Timeout);
  EXPECT_EQ(report.vector.failure_count(), 2u);
}

TEST_F(OracleTest, IsolatedWorkingDirectories) {
  const std::string program =
      "import os\n"
      "print(os.path.exists('marker'), len(os.listdir('.')))\n"
      "open('marker', 'w').close()\n";
  std::vector<TestCase> tests(3, TestCase{"", "False 1"});
  for (int round = 0; round < 2; ++round) {
    EXPECT_TRUE(oracle_.run_tests(program, tests).all_passed());
  }
}

TEST_F(OracleTest, TrailingWhitespaceIgnoredInteriorKept) {
  std::vector<TestCase> tests = {{"", "a b"}};
  EXPECT_TRUE(oracle_.run_tests("print('a b   ')\nprint()\n", tests).all_passed());
  EXPECT_FALSE(oracle_.run_tests("print('a  b')\n", tests).all_passed());
  EXPECT_FALSE(oracle_.run_tests("print('A b')\n", tests).all_passed());
}

TEST_F(OracleTest, VectorLengthConstantAndDeterministic) {
  Assignment a = load_assignment(testing::data_dir() / "prime_pair");
  auto r1 = oracle_.run_tests("print(17)\n", a.tests);
  auto r2 = oracle_.run_tests("print(17)\n", a.tests);
  auto r3 = oracle_.run_tests(*a.reference_solution, a.tests);
  EXPECT_EQ(r1.vector.size(), a.tests.size());
  EXPECT_EQ(r3.vector.size(), a.tests.size());
  EXPECT_EQ(r1.vector, r2.vector);
  EXPECT_EQ(r1.vector.failures, (std::vector<bool>{true, false, true}));
}

TEST_F(OracleTest, TestsRunInParallel) {
  OracleConfig c;
  c.parallelism = 4;
  PythonOracle oracle(c);
  std::vector<TestCase> tests(4, TestCase{"", "done"});
  const auto t0 = std::chrono::steady_clock::now();
  auto report = oracle.run_tests("import time\ntime.sleep(1)\nprint('done')\n", tests);
  EXPECT_TRUE(report.all_passed());
  EXPECT_LT(std::chrono::steady_clock::now() - t0, 3s);
}

}  // namespace
}  // namespace pyrepair
