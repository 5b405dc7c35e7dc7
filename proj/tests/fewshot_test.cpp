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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pyrepair/tokens.hpp"
#include "support.hpp"

namespace pyrepair {
namespace {

TestVector tv(std::initializer_list<bool> fails) { return TestVector{std::vector<bool>(fails)}; }

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(similarity(tv({false, true}), tv({false, true})), 1.0);
  EXPECT_DOUBLE_EQ(similarity(tv({false, true, true}), tv({true, false, false})), 0.0);
  EXPECT_DOUBLE_EQ(similarity(tv({false, true, true, false}), tv({false, true, false, false})), 0.75);
}

TEST(Similarity, LengthMismatchThrows) {
  EXPECT_THROW(similarity(tv({true}), tv({true, false})), std::invalid_argument);
}

TEST(SimilarityProperties, RandomVectors) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 16), bit(0, 1);
  for (int i = 0; i < 10000; ++i) {
    const int n = len(rng);
    TestVector a, b;
    for (int j = 0; j < n; ++j) {
      a.failures.push_back(bit(rng));
      b.failures.push_back(bit(rng));
    }
    const double s = similarity(a, b);
    int same = 0;
    for (int j = 0; j < n; ++j) same += a.failures[j] == b.failures[j];
    ASSERT_DOUBLE_EQ(s, static_cast<double>(same) / n);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
    ASSERT_DOUBLE_EQ(s, similarity(b, a));
    ASSERT_EQ(s == 1.0, a == b);
    ASSERT_DOUBLE_EQ(similarity(a, a), 1.0);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    TestVector pa, pb;
    for (int j : perm) {
      pa.failures.push_back(a.failures[j]);
      pb.failures.push_back(b.failures[j]);
    }
    ASSERT_DOUBLE_EQ(similarity(pa, pb), s);
  }
}

class BankTest : public ::testing::Test {
 protected:
  PythonOracle oracle_;
};

TEST_F(BankTest, FromReverseSumHistories) {
  Assignment a = load_assignment(testing::data_dir() / "reverse_sum");
  auto bank = build_bank(a, oracle_);
  ASSERT_EQ(bank.size(), 2u);
  // s01: v1 fails only the second test, v2 passes.
  EXPECT_EQ(bank[0].student, "s01");
  EXPECT_EQ(bank[0].ordinal, 1u);
  EXPECT_EQ(bank[0].vector, tv({false, true}));
  EXPECT_EQ(bank[0].pair.correct, a.histories.at("s01")[1].source);
  // s02: v1 is a syntax error and is skipped; v2 fails both; v3 passes.
  EXPECT_EQ(bank[1].student, "s02");
  EXPECT_EQ(bank[1].ordinal, 2u);
  EXPECT_EQ(bank[1].vector, tv({true, true}));
  EXPECT_EQ(bank[1].pair.correct, a.histories.at("s02")[2].source);
  // s03 never passes and contributes nothing.
  for (const auto& e : bank) {
    EXPECT_NE(e.student, "s03");
    EXPECT_GE(e.vector.failure_count(), 1u);
    EXPECT_NE(e.pair.incorrect, e.pair.correct);
  }
}

TEST_F(BankTest, EarliestPassingVersionIsUsed) {
  Assignment a = load_assignment(testing::data_dir() / "mult");
  a.histories["s01"].push_back({"m, n = map(int, input().split())\nprint(n * m)\n", 3});
  auto bank = build_bank(a, oracle_);
  ASSERT_FALSE(bank.empty());
  EXPECT_EQ(bank[0].pair.correct, a.histories.at("s01")[1].source);
}

BankEntry entry(std::string student, TestVector v, std::string incorrect, std::string correct,
                std::size_t ordinal = 0) {
  return BankEntry{ExamplePair{std::move(incorrect), std::move(correct)}, std::move(v),
                   std::move(student), ordinal};
}

TEST(SelectShots, SingleEntryRegardlessOfSimilarity) {
  std::vector<BankEntry> bank = {entry("a", tv({true, false}), "x=1", "x=2")};
  auto shots = select_shots(bank, tv({false, true}));
  ASSERT_EQ(shots.size(), 1u);
  EXPECT_EQ(shots[0].incorrect, "x=1");
}

TEST(SelectShots, EmptyBank) { EXPECT_TRUE(select_shots({}, tv({true})).empty()); }

TEST(SelectShots, RankedWithTieBreaks) {
  const TestVector target = tv({false, true});
  std::vector<BankEntry> bank = {
      entry("d", tv({true, false}), "q = 0", "q = 1"),                // 0.0
      entry("c", tv({true, true}), "a = 1 + 2 + 3", "a = 6"),         // 0.5, TED 4
      entry("b", tv({false, false}), "print (m+n)", "print (m*n)"),   // 0.5, TED 1
      entry("a", tv({false, true}), "x = 1", "x = 2"),                // 1.0
  };
  auto shots = select_shots(bank, target, 3);
  ASSERT_EQ(shots.size(), 3u);
  EXPECT_EQ(shots[0].incorrect, "x = 1");
  EXPECT_EQ(shots[1].incorrect, "print (m+n)");
  EXPECT_EQ(shots[2].incorrect, "a = 1 + 2 + 3");
}

TEST(SelectShots, TiedTedFallsBackToStudentId) {
  std::vector<BankEntry> bank = {entry("zoe", tv({true}), "a", "b"), entry("amy", tv({true}), "c", "d")};
  auto shots = select_shots(bank, tv({true}), 1);
  ASSERT_EQ(shots.size(), 1u);
  EXPECT_EQ(shots[0].incorrect, "c");
}

TEST(SelectShots, OnePerStudentAndFilters) {
  std::vector<BankEntry> bank = {entry("a", tv({true}), "p1", "c1", 1),
                                 entry("a", tv({true}), "p2", "c2", 2),
                                 entry("b", tv({true}), "target", "c3"),
                                 entry("me", tv({true}), "p4", "c4")};
  ShotFilter filter{"me", "target"};
  auto shots = select_shots(bank, tv({true}), 3, filter);
  ASSERT_EQ(shots.size(), 1u);
  EXPECT_EQ(shots[0].incorrect, "p1");
}

TEST(SelectShotsProperties, DeterministicAndNonIncreasing) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> bit(0, 1), n_entries(0, 12), student(0, 5);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<BankEntry> bank;
    for (int i = 0, n = n_entries(rng); i < n; ++i) {
      TestVector v{{bool(bit(rng)), bool(bit(rng)), bool(bit(rng)), true}};
      bank.push_back(entry("s" + std::to_string(student(rng)), v, "x = " + std::to_string(i),
                           "x = " + std::to_string(i) + " + 1", i));
    }
    TestVector target{{bool(bit(rng)), bool(bit(rng)), bool(bit(rng)), bool(bit(rng))}};
    const std::string excluded = "x = 0";
    auto shots = select_shots(bank, target, 3, ShotFilter{std::nullopt, excluded});
    ASSERT_EQ(shots, select_shots(bank, target, 3, ShotFilter{std::nullopt, excluded}));
    ASSERT_LE(shots.size(), 3u);
    double prev = 2.0;
    std::set<std::string> students;
    for (const auto& s : shots) {
      ASSERT_NE(s.incorrect, excluded);
      auto it = std::find_if(bank.begin(), bank.end(),
                             [&](const BankEntry& e) { return e.pair == s; });
      ASSERT_NE(it, bank.end());
      const double sim = similarity(it->vector, target);
      ASSERT_LE(sim, prev);
      prev = sim;
      ASSERT_TRUE(students.insert(it->student).second);
    }
  }
}

}  // namespace
}  // namespace pyrepair
