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

#ifndef PYREPAIR_ASSIGNMENT_HPP_
#define PYREPAIR_ASSIGNMENT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pyrepair {

class PythonOracle;

struct TestCase {
  std::string input;            // fed to stdin verbatim
  std::string expected_output;  // stored normalized

  bool operator==(const TestCase&) const = default;
};

struct ProgramVersion {
  std::string source;
  std::size_t ordinal = 0;

  bool operator==(const ProgramVersion&) const = default;
};

/// One programming exercise plus everything the repair engine may use as
/// context: statement, tests, and peers' edit histories.
struct Assignment {
  std::string id;
  std::string description;
  std::vector<TestCase> tests;
  std::optional<std::string> reference_solution;
  // student id -> versions in ascending ordinal order
  std::map<std::string, std::vector<ProgramVersion>> histories;

  bool operator==(const Assignment&) const = default;
};

/// Reads the directory layout
///
///   <dir>/description.txt
///   <dir>/reference.py                 (optional)
///   <dir>/tests/<stem>.in, <stem>.out  (paired by stem, sorted by stem)
///   <dir>/history/<student>/<vNN>.py   (ordinal = numeric suffix)
///
/// The assignment id is the directory name. Throws LoadError.
Assignment load_assignment(const std::filesystem::path& dir);

/// Writes `a` back in the layout above. Tests are named t001, t002, ...;
/// versions keep their ordinals as v<NN>.py.
void write_assignment(const Assignment& a, const std::filesystem::path& dir);

/// Non-fatal problems: missing histories, duplicate test inputs, and a
/// reference solution that fails its own tests.
std::vector<std::string> validate(const Assignment& a,
                                  const PythonOracle& oracle);

}  // namespace pyrepair

#endif  // PYREPAIR_ASSIGNMENT_HPP_
