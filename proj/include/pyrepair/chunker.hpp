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

#ifndef PYREPAIR_CHUNKER_HPP_
#define PYREPAIR_CHUNKER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pyrepair/oracles.hpp"

namespace pyrepair {

inline constexpr std::size_t kTabWidth = 8;

/// A contiguous line range [start, end) of a source file.
struct Chunk {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::string> lines;  // verbatim, indentation included

  std::string text() const;
  bool operator==(const Chunk&) const = default;
};

struct ErrorLocation {
  std::vector<std::string> lines;
  std::size_t error_line = 0;  // 0-based
};

/// Splits `source` into lines and maps the diagnostic's 1-based line to a
/// 0-based index, clamped to the last line (end-of-file errors).
ErrorLocation locate_error(std::string_view source, const Diagnostic& diag);

/// Leading whitespace width, tabs advancing to the next multiple of
/// `tab_width`.
std::size_t indentation_level(std::span<const std::string> lines,
                              std::size_t idx,
                              std::size_t tab_width = kTabWidth);

/// Maximal contiguous [start, end) around `idx` in which every non-blank
/// line is indented at least `level`. Blank lines are kept inside the range
/// but trimmed from its edges (`idx` itself always stays).
std::pair<std::size_t, std::size_t> slice_biway(
    std::span<const std::string> lines, std::size_t idx, std::size_t level,
    std::size_t tab_width = kTabWidth);

/// True when `line`, after indentation, opens with a control-flow keyword
/// (if, elif, else, for, while, try, except, finally, with, def).
bool starts_control_flow(std::string_view line);

/// The error-enclosing chunk: slice at the error line's indentation, then,
/// if the slice opens with a control-flow header, re-slice from that header
/// at its own indentation. The result never ends before the error line.
Chunk chunk(std::string_view source, const Diagnostic& diag);

/// The whole program as a single chunk (chunking disabled).
Chunk whole_program(std::string_view source);

/// Replaces chunk's line range in `source` by the lines of `replacement`.
/// Lines outside the range are copied byte for byte; a trailing newline on
/// `source` is preserved.
std::string merge_chunk(std::string_view source, const Chunk& chunk,
                        std::string_view replacement);

}  // namespace pyrepair

#endif  // PYREPAIR_CHUNKER_HPP_
