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

#include "pyrepair/chunker.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "pyrepair/text.hpp"

namespace pyrepair {
namespace {

constexpr std::array<std::string_view, 10> kControlFlow = {
    "if", "elif", "else", "for", "while", "try", "except", "finally", "with", "def"};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

Chunk make_chunk(const std::vector<std::string>& lines, std::size_t start,
                 std::size_t end) {
  Chunk c;
  c.start = start;
  c.end = end;
  c.lines.assign(lines.begin() + static_cast<std::ptrdiff_t>(start),
                 lines.begin() + static_cast<std::ptrdiff_t>(end));
  return c;
}

}  // namespace

std::string Chunk::text() const { return join_lines(lines); }

ErrorLocation locate_error(std::string_view source, const Diagnostic& diag) {
  ErrorLocation loc;
  loc.lines = split_lines(source);
  if (loc.lines.empty()) loc.lines.emplace_back();
  const std::size_t line = diag.line == 0 ? 0 : diag.line - 1;
  loc.error_line = std::min(line, loc.lines.size() - 1);
  return loc;
}

std::size_t indentation_level(std::span<const std::string> lines,
                              std::size_t idx, std::size_t tab_width) {
  std::size_t col = 0;
  for (char c : lines[idx]) {
    if (c == ' ') {
      ++col;
    } else if (c == '\t') {
      col = (col / tab_width + 1) * tab_width;
    } else if (c == '\f') {
      col = 0;
    } else {
      break;
    }
  }
  return col;
}

std::pair<std::size_t, std::size_t> slice_biway(
    std::span<const std::string> lines, std::size_t idx, std::size_t level,
    std::size_t tab_width) {
  auto fits = [&](std::size_t i) {
    return is_blank(lines[i]) || indentation_level(lines, i, tab_width) >= level;
  };
  std::size_t start = idx;
  while (start > 0 && fits(start - 1)) --start;
  while (start < idx && is_blank(lines[start])) ++start;

  std::size_t end = idx + 1;
  while (end < lines.size() && fits(end)) ++end;
  while (end > idx + 1 && is_blank(lines[end - 1])) --end;
  return {start, end};
}

bool starts_control_flow(std::string_view line) {
  auto body = ltrim(line);
  for (auto kw : kControlFlow) {
    if (body.substr(0, kw.size()) == kw &&
        (body.size() == kw.size() || !is_ident_char(body[kw.size()]))) {
      return true;
    }
  }
  return false;
}

Chunk chunk(std::string_view source, const Diagnostic& diag) {
  auto loc = locate_error(source, diag);
  const auto& lines = loc.lines;
  auto level = indentation_level(lines, loc.error_line);
  auto [start, end] = slice_biway(lines, loc.error_line, level);
  if (starts_control_flow(lines[start])) {
    auto header_level = indentation_level(lines, start);
    const auto first_end = end;
    std::tie(start, end) = slice_biway(lines, start, header_level);
    // A header indented deeper than the error line would otherwise cut the
    // error line off.
    end = std::max(end, first_end);
  }
  return make_chunk(lines, start, end);
}

Chunk whole_program(std::string_view source) {
  auto lines = split_lines(source);
  if (lines.empty()) lines.emplace_back();
  return make_chunk(lines, 0, lines.size());
}

std::string merge_chunk(std::string_view source, const Chunk& c,
                        std::string_view replacement) {
  auto lines = split_lines(source);
  if (lines.empty()) lines.emplace_back();
  // Every '\n' separates lines here so join(chunk.lines) round-trips even
  // when the chunk ends in a blank line.
  std::vector<std::string> repl;
  for (std::size_t pos = 0;;) {
    auto nl = replacement.find('\n', pos);
    repl.emplace_back(replacement.substr(pos, nl - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  std::vector<std::string> merged;
  merged.reserve(lines.size() - (c.end - c.start) + repl.size());
  merged.insert(merged.end(), lines.begin(),
                lines.begin() + static_cast<std::ptrdiff_t>(c.start));
  merged.insert(merged.end(), repl.begin(), repl.end());
  merged.insert(merged.end(), lines.begin() + static_cast<std::ptrdiff_t>(c.end),
                lines.end());
  std::string out = join_lines(merged);
  if (!source.empty() && source.back() == '\n') out += '\n';
  return out;
}

}  // namespace pyrepair
