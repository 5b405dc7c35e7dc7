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

#ifndef PYREPAIR_TEXT_HPP_
#define PYREPAIR_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace pyrepair {

/// Splits on '\n'. A single trailing newline terminates the last line and
/// does not start a new (empty) one; "" yields no lines.
std::vector<std::string> split_lines(std::string_view text);

/// Joins with '\n' and no trailing newline.
std::string join_lines(const std::vector<std::string>& lines);

std::string_view rtrim(std::string_view s);
std::string_view ltrim(std::string_view s);
std::string_view trim(std::string_view s);

bool is_blank(std::string_view s);

/// Reads a whole file as bytes. Throws LoadError naming the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pyrepair

#endif  // PYREPAIR_TEXT_HPP_
