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

#ifndef PYREPAIR_PROMPTS_HPP_
#define PYREPAIR_PROMPTS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pyrepair/assignment.hpp"
#include "pyrepair/chunker.hpp"
#include "pyrepair/oracles.hpp"

namespace pyrepair {

enum class PromptKind { SyntaxPlain, SyntaxWithDiagnostic, Semantic };

std::string_view to_string(PromptKind kind);

/// A set of prompt sections. The program section is always present in a
/// well-formed structure.
class Structure {
 public:
  enum Section : unsigned {
    kProgram = 1u << 0,
    kDiagnostics = 1u << 1,
    kDescription = 1u << 2,
    kTests = 1u << 3,
  };

  constexpr Structure() = default;
  constexpr explicit Structure(unsigned bits) : bits_(bits) {}

  constexpr bool has(Section s) const { return (bits_ & s) != 0; }
  constexpr Structure with(Section s) const { return Structure(bits_ | s); }
  constexpr Structure without(Section s) const { return Structure(bits_ & ~unsigned(s)); }
  constexpr unsigned bits() const { return bits_; }

  /// "program+diagnostics+description+tests" style name.
  std::string name() const;
  /// Inverse of name(); also accepts the short forms p, dg, ds, t.
  /// Throws std::invalid_argument on unknown section names.
  static Structure parse(std::string_view name);

  constexpr bool operator==(const Structure&) const = default;
  constexpr auto operator<=>(const Structure&) const = default;

 private:
  unsigned bits_ = 0;
};

/// The six semantic prompt structures used by the ensemble.
inline constexpr std::array<Structure, 6> kSemanticStructures = {
    Structure(Structure::kProgram),
    Structure(Structure::kProgram | Structure::kDiagnostics),
    Structure(Structure::kProgram | Structure::kDescription),
    Structure(Structure::kProgram | Structure::kDiagnostics | Structure::kDescription),
    Structure(Structure::kProgram | Structure::kDiagnostics | Structure::kDescription |
              Structure::kTests),
    Structure(Structure::kProgram | Structure::kDiagnostics | Structure::kTests),
};

/// Maximum number of test cases rendered into one prompt.
inline constexpr std::size_t kMaxPromptTests = 4;

inline constexpr std::string_view kTrailer = "### Correct Program ###\n";
inline constexpr std::string_view kSyntaxInstruction = "# Fix the syntax error of the program #\n";

struct Prompt {
  std::string text;
  PromptKind kind = PromptKind::Semantic;
  Structure structure;  // sections actually rendered
  Structure requested;  // sections asked for; differs when one was empty
  std::size_t shots = 0;
};

/// An (incorrect, correct) pair of versions from a peer's history.
struct ExamplePair {
  std::string incorrect;
  std::string correct;

  bool operator==(const ExamplePair&) const = default;
};

/// Two prompts for the chunk: without and with the interpreter message.
std::vector<Prompt> syntax_prompts(const Chunk& chunk, const Diagnostic& diag);

/// "# Incorrect Program #" / "# Correct Program #" block for one shot.
std::string render_shot(const ExamplePair& pair);

/// Compact failure summary of the first failing test, used as the
/// diagnostics section of semantic prompts. Empty when all tests pass.
std::string failure_summary(const TestReport& report,
                            std::span<const TestCase> tests);

/// One semantic prompt for `structure`. `diagnostics` is the rendered
/// failure summary; an empty string drops the section.
Prompt semantic_prompt(std::string_view program, const Assignment& assignment,
                       std::span<const ExamplePair> shots,
                       std::string_view diagnostics, Structure structure);

/// All six ensemble structures, in kSemanticStructures order.
std::vector<Prompt> semantic_prompts(std::string_view program,
                                     const Assignment& assignment,
                                     std::span<const ExamplePair> shots,
                                     std::string_view diagnostics = {});

}  // namespace pyrepair

#endif  // PYREPAIR_PROMPTS_HPP_
