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

#include <stdexcept>

#include "pyrepair/text.hpp"

namespace pyrepair {
namespace {

// Text as a block that ends in exactly the newline(s) it already has, or
// one added if it had none.
std::string block(std::string_view text) {
  std::string out(text);
  if (!out.empty() && out.back() != '\n') out += '\n';
  return out;
}

std::string strip_trailing_newlines(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return std::string(text);
}

std::string join_blocks(const std::vector<std::string>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '\n';
    out += blocks[i];
  }
  return out;
}

std::string description_block(std::string_view description) {
  auto lines = split_lines(strip_trailing_newlines(description));
  std::string out;
  for (const auto& line : lines) {
    if (!is_blank(line) && line.front() != '#') out += '#';
    out += line;
    out += '\n';
  }
  return out;
}

std::string tests_block(std::span<const TestCase> tests) {
  std::vector<std::string> cases;
  for (std::size_t i = 0; i < tests.size() && i < kMaxPromptTests; ++i) {
    cases.push_back("#input:\n" + block(strip_trailing_newlines(tests[i].input)) +
                    "#output:\n" + block(tests[i].expected_output));
  }
  return join_blocks(cases);
}

}  // namespace

std::string_view to_string(PromptKind kind) {
  switch (kind) {
    case PromptKind::SyntaxPlain: return "syntax-plain";
    case PromptKind::SyntaxWithDiagnostic: return "syntax-with-diagnostic";
    case PromptKind::Semantic: return "semantic";
  }
  return "semantic";
}

std::string Structure::name() const {
  std::string out;
  auto add = [&](Section s, const char* n) {
    if (!has(s)) return;
    if (!out.empty()) out += '+';
    out += n;
  };
  add(kProgram, "program");
  add(kDiagnostics, "diagnostics");
  add(kDescription, "description");
  add(kTests, "tests");
  return out;
}

Structure Structure::parse(std::string_view name) {
  Structure s;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    auto plus = name.find('+', pos);
    if (plus == std::string_view::npos) plus = name.size();
    auto part = trim(name.substr(pos, plus - pos));
    if (part == "program" || part == "p") {
      s = s.with(kProgram);
    } else if (part == "diagnostics" || part == "dg") {
      s = s.with(kDiagnostics);
    } else if (part == "description" || part == "ds") {
      s = s.with(kDescription);
    } else if (part == "tests" || part == "t") {
      s = s.with(kTests);
    } else {
      throw std::invalid_argument("unknown prompt section '" + std::string(part) + "'");
    }
    pos = plus + 1;
  }
  return s;
}

std::vector<Prompt> syntax_prompts(const Chunk& chunk, const Diagnostic& diag) {
  const std::string header = std::string(kSyntaxInstruction);
  const std::string program = "# Buggy Program #\n" + block(chunk.text());
  const std::string message = "### Error Msg ###\n" + block(strip_trailing_newlines(diag.raw));
  const std::string trailer(kTrailer);

  Prompt plain;
  plain.kind = PromptKind::SyntaxPlain;
  plain.structure = plain.requested = Structure(Structure::kProgram);
  plain.text = join_blocks({header, program, trailer});

  Prompt with_msg;
  with_msg.kind = PromptKind::SyntaxWithDiagnostic;
  with_msg.structure = with_msg.requested =
      Structure(Structure::kProgram | Structure::kDiagnostics);
  with_msg.text = join_blocks({header, message, program, trailer});
  return {std::move(plain), std::move(with_msg)};
}

std::string render_shot(const ExamplePair& pair) {
  return "# Incorrect Program #\n" + block(pair.incorrect) +
         "# Correct Program #\n" + block(pair.correct);
}

std::string failure_summary(const TestReport& report,
                            std::span<const TestCase> tests) {
  auto idx = report.first_failure();
  if (!idx || *idx >= tests.size()) return {};
  const auto& outcome = report.per_test[*idx];
  std::string out = "#test " + std::to_string(*idx + 1) + " failed: " +
                    std::string(to_string(outcome.status)) + "\n";
  out += "#input:\n" + block(strip_trailing_newlines(tests[*idx].input));
  out += "#expected output:\n" + block(tests[*idx].expected_output);
  switch (outcome.status) {
    case TestStatus::WrongOutput: {
      auto actual = normalize(outcome.actual_output);
      out += "#actual output:\n" + (actual.empty() ? std::string("(no output)\n") : block(actual));
      break;
    }
    case TestStatus::RuntimeException: {
      auto lines = split_lines(outcome.error_output);
      std::string last;
      for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        if (!is_blank(*it)) {
          last = std::string(trim(*it));
          break;
        }
      }
      out += "#error:\n" + block(last.empty() ? std::string("(nonzero exit status)") : last);
      break;
    }
    case TestStatus::Timeout:
    case TestStatus::Pass:
      break;
  }
  return out;
}

Prompt semantic_prompt(std::string_view program, const Assignment& assignment,
                       std::span<const ExamplePair> shots,
                       std::string_view diagnostics, Structure structure) {
  Prompt p;
  p.kind = PromptKind::Semantic;
  p.requested = structure.with(Structure::kProgram);
  p.shots = shots.size();

  std::vector<std::string> blocks;
  for (const auto& shot : shots) blocks.push_back(render_shot(shot));

  Structure rendered(Structure::kProgram);
  if (structure.has(Structure::kDiagnostics) && !is_blank(diagnostics)) {
    blocks.push_back("### Error Msg ###\n" + block(strip_trailing_newlines(diagnostics)));
    rendered = rendered.with(Structure::kDiagnostics);
  }
  blocks.push_back("### Buggy Program ###\n" + block(program));
  if (structure.has(Structure::kDescription) && !is_blank(assignment.description)) {
    blocks.push_back(description_block(assignment.description));
    rendered = rendered.with(Structure::kDescription);
  }
  if (structure.has(Structure::kTests) && !assignment.tests.empty()) {
    blocks.push_back(tests_block(assignment.tests));
    rendered = rendered.with(Structure::kTests);
  }
  blocks.emplace_back(kTrailer);
  p.structure = rendered;
  p.text = join_blocks(blocks);
  return p;
}

std::vector<Prompt> semantic_prompts(std::string_view program,
                                     const Assignment& assignment,
                                     std::span<const ExamplePair> shots,
                                     std::string_view diagnostics) {
  std::vector<Prompt> prompts;
  for (auto s : kSemanticStructures) {
    prompts.push_back(semantic_prompt(program, assignment, shots, diagnostics, s));
  }
  return prompts;
}

}  // namespace pyrepair
