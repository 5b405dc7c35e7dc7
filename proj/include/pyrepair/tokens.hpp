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

#ifndef PYREPAIR_TOKENS_HPP_
#define PYREPAIR_TOKENS_HPP_

#include <algorithm>
#include <cstddef>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

namespace pyrepair {

enum class TokenKind {
  Name,
  Number,
  String,
  Operator,
  Punctuation,
  Keyword,
  Comment,
  Newline,
  Indent,
  Dedent,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;  // empty for newline / indent / dedent

  bool operator==(const Token&) const = default;
};

using TokenSeq = std::vector<Token>;

/// Error-tolerant Python lexer. Produces newline tokens at the end of
/// logical lines, indent/dedent tokens at indentation changes, and comment
/// tokens; intra-line whitespace, blank lines and line continuations are
/// layout only. Characters it cannot classify become one-character
/// punctuation tokens.
TokenSeq tokenize(std::string_view source);

/// Renders tokens back to source text that tokenizes to the same sequence.
std::string render_tokens(const TokenSeq& tokens);

/// Unit-cost Levenshtein distance between two ranges, two-row DP.
template <std::ranges::random_access_range A, std::ranges::random_access_range B>
std::size_t levenshtein(const A& a, const B& b) {
  const std::size_t n = std::ranges::size(a);
  const std::size_t m = std::ranges::size(b);
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t subst =
          prev[j - 1] + (std::ranges::begin(a)[i - 1] == std::ranges::begin(b)[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, subst});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

/// Token edit distance (TED) between two sources.
std::size_t token_edit_distance(std::string_view a, std::string_view b);

}  // namespace pyrepair

#endif  // PYREPAIR_TOKENS_HPP_
