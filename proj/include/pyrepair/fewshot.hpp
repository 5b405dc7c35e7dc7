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

#ifndef PYREPAIR_FEWSHOT_HPP_
#define PYREPAIR_FEWSHOT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pyrepair/assignment.hpp"
#include "pyrepair/oracles.hpp"
#include "pyrepair/prompts.hpp"

namespace pyrepair {

/// An incorrect version from a peer's history, paired with the earliest
/// later version of the same peer that passes every test.
struct BankEntry {
  ExamplePair pair;
  TestVector vector;  // of pair.incorrect; at least one failure
  std::string student;
  std::size_t ordinal = 0;  // of pair.incorrect
};

/// Scans every history with the oracles and collects bank entries. Students
/// that never reach a passing version contribute nothing.
std::vector<BankEntry> build_bank(const Assignment& assignment,
                                  const PythonOracle& oracle);

/// 1 - normalized Hamming distance. Throws std::invalid_argument when the
/// vectors differ in length.
double similarity(const TestVector& a, const TestVector& b);

struct ShotFilter {
  std::optional<std::string> exclude_student;
  std::optional<std::string> exclude_program;  // the program under repair
};

/// Up to `k` most similar pairs, at most one per peer. Ties go to the pair
/// with the smaller token edit distance, then to the smaller student id.
std::vector<ExamplePair> select_shots(std::span<const BankEntry> bank,
                                      const TestVector& target,
                                      std::size_t k = 3,
                                      const ShotFilter& filter = {});

}  // namespace pyrepair

#endif  // PYREPAIR_FEWSHOT_HPP_
