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

// Shared helpers for the test suites.

#ifndef PYREPAIR_TESTS_SUPPORT_HPP_
#define PYREPAIR_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pyrepair/text.hpp"

namespace pyrepair::testing {

inline std::filesystem::path source_dir() { return PYREPAIR_SOURCE_DIR; }
inline std::filesystem::path data_dir() { return source_dir() / "tests" / "data"; }
inline std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }
inline std::filesystem::path synthetic_dir() { return source_dir() / "data" / "synthetic"; }

inline std::string slurp(const std::filesystem::path& p) { return read_file(p.string()); }

/// Loop header followed by an unindented body.
inline constexpr const char* kWhileNoIndent = "while (n > 0):\na = n\n";

/// Independent edit-distance oracle: memoized recursion over suffixes.
template <typename T>
std::size_t reference_edit_distance(const std::vector<T>& a, const std::vector<T>& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> d = [&](std::size_t i,
                                                                std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best;
    if (a[i] == b[j]) {
      best = d(i + 1, j + 1);
    } else {
      best = 1 + std::min({d(i + 1, j), d(i, j + 1), d(i + 1, j + 1)});
    }
    memo[key] = best;
    return best;
  };
  return d(0, 0);
}

}  // namespace pyrepair::testing

#endif  // PYREPAIR_TESTS_SUPPORT_HPP_
