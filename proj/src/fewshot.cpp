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

#include "pyrepair/fewshot.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "pyrepair/tokens.hpp"

namespace pyrepair {

std::vector<BankEntry> build_bank(const Assignment& assignment,
                                  const PythonOracle& oracle) {
  std::vector<BankEntry> bank;
  for (const auto& [student, versions] : assignment.histories) {
    // Per version: nullopt when syntactically invalid, else its vector.
    std::vector<std::optional<TestVector>> vectors;
    std::optional<std::size_t> first_correct;
    for (std::size_t i = 0; i < versions.size(); ++i) {
      if (!oracle.check_syntax(versions[i].source).ok()) {
        vectors.emplace_back();
        continue;
      }
      auto report = oracle.run_tests(versions[i].source, assignment.tests);
      vectors.emplace_back(report.vector);
      if (report.all_passed()) {
        first_correct = i;
        break;
      }
    }
    if (!first_correct) continue;
    for (std::size_t i = 0; i < *first_correct; ++i) {
      if (!vectors[i] || vectors[i]->all_passed()) continue;
      if (versions[i].source == versions[*first_correct].source) continue;
      bank.push_back(BankEntry{
          ExamplePair{versions[i].source, versions[*first_correct].source},
          *vectors[i], student, versions[i].ordinal});
    }
  }
  return bank;
}

double similarity(const TestVector& a, const TestVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("similarity: test vectors differ in length");
  }
  if (a.size() == 0) return 1.0;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.failures[i] != b.failures[i]) ++differing;
  }
  return 1.0 - static_cast<double>(differing) / static_cast<double>(a.size());
}

std::vector<ExamplePair> select_shots(std::span<const BankEntry> bank,
                                      const TestVector& target, std::size_t k,
                                      const ShotFilter& filter) {
  struct Ranked {
    const BankEntry* entry;
    double sim;
    std::size_t ted;
  };
  std::vector<Ranked> ranked;
  for (const auto& e : bank) {
    if (filter.exclude_student && e.student == *filter.exclude_student) continue;
    if (filter.exclude_program && e.pair.incorrect == *filter.exclude_program) continue;
    ranked.push_back({&e, similarity(e.vector, target),
                      token_edit_distance(e.pair.incorrect, e.pair.correct)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.sim != b.sim) return a.sim > b.sim;
    if (a.ted != b.ted) return a.ted < b.ted;
    if (a.entry->student != b.entry->student) return a.entry->student < b.entry->student;
    return a.entry->ordinal < b.entry->ordinal;
  });
  std::vector<ExamplePair> shots;
  std::set<std::string> used;
  for (const auto& r : ranked) {
    if (shots.size() >= k) break;
    if (!used.insert(r.entry->student).second) continue;
    shots.push_back(r.entry->pair);
  }
  return shots;
}

}  // namespace pyrepair
