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

// The golden prompt set: two syntax templates, six semantic templates and
// two prompts for the worked examples (multimodal zero-shot and few-shot).

#ifndef PYREPAIR_TESTS_GOLDEN_CASES_HPP_
#define PYREPAIR_TESTS_GOLDEN_CASES_HPP_

#include <string>
#include <vector>

#include "pyrepair/assignment.hpp"
#include "pyrepair/chunker.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/prompts.hpp"
#include "support.hpp"

namespace pyrepair::testing {

struct GoldenCase {
  std::string file;  // under tests/golden
  Prompt prompt;
};

inline const char* kReverseSumProgram =
    "x=input()\n"
    "y=int(x)\n"
    "z = number\n"
    "y = 10 * y + z\n"
    "number = number / 10\n"
    "number = int(number)\n"
    "print(\"Reverse: {}\".format(x[::-1]))\n"
    "print(\"Sum: {}\".format(Sum))\n";

inline Diagnostic while_diagnostic() {
  Diagnostic d;
  d.line = 2;
  d.column = 1;
  d.kind = DiagnosticKind::IndentationError;
  d.message = "expected an indented block after 'while' statement on line 1";
  d.raw =
      "  File \"<unknown>\", line 2\n"
      "    a = n\n"
      "    ^\n"
      "IndentationError: expected an indented block after 'while' statement on line 1\n";
  return d;
}

/// The report a run of kReverseSumProgram produces: a name error on every test.
inline TestReport reverse_sum_report() {
  TestReport r;
  r.vector.failures = {true, true};
  const std::string err =
      "Traceback (most recent call last):\n"
      "  File \"main.py\", line 3, in <module>\n"
      "    z = number\n"
      "NameError: name 'number' is not defined\n";
  r.per_test = {{TestStatus::RuntimeException, "", err}, {TestStatus::RuntimeException, "", err}};
  return r;
}

inline Assignment mult_assignment() {
  Assignment a;
  a.id = "mult";
  a.description = "Read two integers and print their product.\n";
  a.tests = {{"2 2\n", "4"}, {"2 3\n", "6"}};
  return a;
}

inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  const Diagnostic diag = while_diagnostic();
  const Chunk ch = chunk(kWhileNoIndent, diag);
  auto syntax = syntax_prompts(ch, diag);
  cases.push_back({"syntax_plain.txt", syntax[0]});
  cases.push_back({"syntax_with_diagnostic.txt", syntax[1]});

  const Assignment reverse_sum = load_assignment(data_dir() / "reverse_sum");
  const std::string summary = failure_summary(reverse_sum_report(), reverse_sum.tests);
  const char* names[] = {"semantic_p.txt",        "semantic_p_dg.txt",
                         "semantic_p_ds.txt",     "semantic_p_dg_ds.txt",
                         "semantic_p_dg_ds_t.txt", "semantic_p_dg_t.txt"};
  auto semantic = semantic_prompts(kReverseSumProgram, reverse_sum, {}, summary);
  for (std::size_t i = 0; i < semantic.size(); ++i) cases.push_back({names[i], semantic[i]});

  // Zero-shot prompt with program, description and tests.
  cases.push_back({"semantic_multimodal.txt",
                   semantic_prompt(kReverseSumProgram, reverse_sum, {}, "",
                                   Structure::parse("p+dg+ds+t"))});

  // One shot, program and tests.
  const std::vector<ExamplePair> shots = {{"print (m+n)", "print (m*n)"}};
  cases.push_back({"semantic_few_shot.txt",
                   semantic_prompt("sum = m\ni = 0\nwhile i < n:\n  sum += 1\n  i += 1\nprint (sum)\n",
                                   mult_assignment(), shots, "", Structure::parse("p+dg+t"))});
  return cases;
}

}  // namespace pyrepair::testing

#endif  // PYREPAIR_TESTS_GOLDEN_CASES_HPP_
