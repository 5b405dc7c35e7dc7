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

#include "pyrepair/prompts.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

#include "golden_cases.hpp"
#include "support.hpp"

namespace pyrepair {
namespace {

// Set PYREPAIR_UPDATE_GOLDEN=1 to rewrite the files after an intended
// layout change.
TEST(GoldenPrompts, MatchCheckedInFiles) {
  const bool update = std::getenv("PYREPAIR_UPDATE_GOLDEN") != nullptr;
  const auto cases = testing::golden_cases();
  ASSERT_EQ(cases.size(), 10u);
  for (const auto& c : cases) {
    const auto path = testing::golden_dir() / c.file;
    if (update) write_file(path.string(), c.prompt.text);
    EXPECT_EQ(c.prompt.text, testing::slurp(path)) << c.file;
  }
}

TEST(GoldenPrompts, RenderingIsPure) {
  const auto a = testing::golden_cases(), b = testing::golden_cases();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].prompt.text, b[i].prompt.text);
}

TEST(SyntaxPrompts, Layout) {
  const auto cases = testing::golden_cases();
  const Prompt& plain = cases[0].prompt;
  const Prompt& with = cases[1].prompt;
  EXPECT_EQ(plain.kind, PromptKind::SyntaxPlain);
  EXPECT_EQ(with.kind, PromptKind::SyntaxWithDiagnostic);
  EXPECT_EQ(plain.text,
            "# Fix the syntax error of the program #\n\n"
            "# Buggy Program #\nwhile (n > 0):\na = n\n\n"
            "### Correct Program ###\n");
  EXPECT_EQ(with.text.find("# Fix the syntax error"), 0u);
  EXPECT_LT(with.text.find("### Error Msg ###\n  File \"<unknown>\", line 2"),
            with.text.find("# Buggy Program #"));
  EXPECT_EQ(with.text.substr(with.text.size() - kTrailer.size()), kTrailer);
}

TEST(StructureNames, RoundTrip) {
  for (auto s : kSemanticStructures) EXPECT_EQ(Structure::parse(s.name()), s);
  EXPECT_EQ(Structure::parse("p+dg+ds+t").name(), "program+diagnostics+description+tests");
  EXPECT_EQ(Structure::parse("tests+p"), Structure::parse("p+t"));
  EXPECT_THROW(Structure::parse("p+code"), std::invalid_argument);
}

TEST(SemanticPrompts, SixStructuresInOrder) {
  const Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  auto prompts = semantic_prompts(testing::kReverseSumProgram, a, {}, "#diag\n");
  ASSERT_EQ(prompts.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(prompts[i].requested, kSemanticStructures[i]);
    EXPECT_EQ(prompts[i].structure, kSemanticStructures[i]);
    EXPECT_EQ(prompts[i].kind, PromptKind::Semantic);
    EXPECT_EQ(prompts[i].shots, 0u);
  }
  EXPECT_EQ(prompts[0].text, "### Buggy Program ###\n" + std::string(testing::kReverseSumProgram) +
                                 "\n### Correct Program ###\n");
}

TEST(SemanticPrompts, EmptyDiagnosticsDropSection) {
  const Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  Prompt p = semantic_prompt("x\n", a, {}, "", Structure::parse("p+dg"));
  EXPECT_EQ(p.requested, Structure::parse("p+dg"));
  EXPECT_EQ(p.structure, Structure::parse("p"));
  EXPECT_EQ(p.text.find("Error Msg"), std::string::npos);
}

TEST(SemanticPrompts, DescriptionLinesCommented) {
  Assignment a = testing::mult_assignment();
  a.description = "First line.\n\n#Already commented\nLast.\n";
  Prompt p = semantic_prompt("x\n", a, {}, "", Structure::parse("p+ds"));
  EXPECT_NE(p.text.find("#First line.\n\n#Already commented\n#Last.\n"), std::string::npos);
}

TEST(SemanticPrompts, TestsCappedAtFour) {
  Assignment a = testing::mult_assignment();
  for (int i = 0; i < 6; ++i) a.tests.push_back({std::to_string(i) + "\n", "out" + std::to_string(i)});
  Prompt p = semantic_prompt("x\n", a, {}, "", Structure::parse("p+t"));
  std::size_t count = 0;
  for (auto pos = p.text.find("#input:"); pos != std::string::npos; pos = p.text.find("#input:", pos + 1)) ++count;
  EXPECT_EQ(count, kMaxPromptTests);
  EXPECT_EQ(p.text.find("out2"), std::string::npos);
  EXPECT_NE(p.text.find("#input:\n0\n#output:\nout0\n"), std::string::npos);
}

TEST(SemanticPrompts, ShotsPrecedeProgram) {
  const Assignment a = testing::mult_assignment();
  std::vector<ExamplePair> shots = {{"a = 1\nb = 2", "a = 1\nb = 3\n"}, {"print (m+n)", "print (m*n)"}};
  Prompt p = semantic_prompt("x\n", a, shots, "", Structure::parse("p"));
  EXPECT_EQ(p.shots, 2u);
  EXPECT_EQ(p.text,
            "# Incorrect Program #\na = 1\nb = 2\n# Correct Program #\na = 1\nb = 3\n\n"
            "# Incorrect Program #\nprint (m+n)\n# Correct Program #\nprint (m*n)\n\n"
            "### Buggy Program ###\nx\n\n"
            "### Correct Program ###\n");
}

TEST(RenderShot, Layout) {
  EXPECT_EQ(render_shot({"print (m+n)", "print (m*n)"}),
            "# Incorrect Program #\nprint (m+n)\n# Correct Program #\nprint (m*n)\n");
}

TEST(FailureSummary, Variants) {
  std::vector<TestCase> tests = {{"1\n", "one"}, {"2\n", "two"}};
  TestReport r;
  r.vector.failures = {false, true};
  r.per_test = {{TestStatus::Pass, "one\n", ""}, {TestStatus::WrongOutput, "", ""}};
  EXPECT_EQ(failure_summary(r, tests),
            "#test 2 failed: wrong-output\n#input:\n2\n#expected output:\ntwo\n"
            "#actual output:\n(no output)\n");
  r.per_test[1] = {TestStatus::WrongOutput, "TWO  \n\n", ""};
  EXPECT_NE(failure_summary(r, tests).find("#actual output:\nTWO\n"), std::string::npos);
  r.per_test[1] = {TestStatus::Timeout, "", ""};
  EXPECT_EQ(failure_summary(r, tests),
            "#test 2 failed: timeout\n#input:\n2\n#expected output:\ntwo\n");
  r.per_test[1] = {TestStatus::RuntimeException, "", "Traceback\n  x\nValueError: bad\n\n"};
  EXPECT_NE(failure_summary(r, tests).find("#error:\nValueError: bad\n"), std::string::npos);
  r.vector.failures = {false, false};
  r.per_test[1] = {TestStatus::Pass, "two", ""};
  EXPECT_EQ(failure_summary(r, tests), "");
}

}  // namespace
}  // namespace pyrepair
