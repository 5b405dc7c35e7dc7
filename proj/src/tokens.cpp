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

#include "pyrepair/tokens.hpp"

#include <array>
#include <cctype>

#include "pyrepair/chunker.hpp"
#include "pyrepair/text.hpp"

namespace pyrepair {
namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False", "None",   "True",    "and",      "as",       "assert", "async",
    "await", "break",  "class",   "continue", "def",      "del",    "elif",
    "else",  "except", "finally", "for",      "from",     "global", "if",
    "import", "in",    "is",      "lambda",   "nonlocal", "not",    "or",
    "pass",  "raise",  "return",  "try",      "while",    "with",   "yield"};

// Longest first so the first match is the maximal munch.
constexpr std::array<std::string_view, 48> kSymbols = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>",
    "<=",  ">=",  "==",  "!=",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=",
    "^=",  "@=",  "+",   "-",   "*",   "/",  "%",  "@",  "&",  "|",  "^",
    "~",   "<",   ">",   "=",   "(",   ")",  "[",  "]",  "{",  "}",  ",",
    ":",   ";",   ".",   "!"};

bool is_punctuation(std::string_view sym) {
  return sym == "(" || sym == ")" || sym == "[" || sym == "]" || sym == "{" ||
         sym == "}" || sym == "," || sym == ":" || sym == ";" || sym == "." ||
         sym == "..." || sym == "!";
}

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool is_ident_char(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

bool is_keyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

bool is_string_prefix(std::string_view p) {
  std::string lower;
  for (char c : p) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return lower == "r" || lower == "u" || lower == "b" || lower == "f" ||
         lower == "br" || lower == "rb" || lower == "fr" || lower == "rf";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : s_(src) {}

  TokenSeq run() {
    while (pos_ < s_.size()) {
      if (line_start_ && depth_ == 0) {
        if (!indentation()) continue;
      }
      const char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\f' || c == '\r') {
        ++pos_;
      } else if (c == '\n') {
        ++pos_;
        if (depth_ == 0) {
          emit(TokenKind::Newline, "");
          line_start_ = true;
        }
      } else if (c == '\\' && continuation_at(pos_)) {
        pos_ += s_[pos_ + 1] == '\r' ? 3 : 2;
      } else if (c == '#') {
        comment();
      } else if (string_start()) {
        string_literal();
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        name();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < s_.size() &&
                  std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
        number();
      } else {
        symbol();
      }
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::Dedent, "");
    }
    return std::move(out_);
  }

 private:
  void emit(TokenKind k, std::string_view lexeme) {
    out_.push_back(Token{k, std::string(lexeme)});
  }

  bool continuation_at(std::size_t i) const {
    if (i + 1 < s_.size() && s_[i + 1] == '\n') return true;
    return i + 2 < s_.size() && s_[i + 1] == '\r' && s_[i + 2] == '\n';
  }

  // Handles the start of a physical line at bracket depth 0. Returns false
  // when the line was consumed entirely (blank or comment-only).
  bool indentation() {
    std::size_t col = 0;
    std::size_t i = pos_;
    for (; i < s_.size(); ++i) {
      const char c = s_[i];
      if (c == ' ') {
        ++col;
      } else if (c == '\t') {
        col = (col / kTabWidth + 1) * kTabWidth;
      } else if (c == '\f') {
        col = 0;
      } else if (c != '\r') {
        break;
      }
    }
    if (i >= s_.size()) {
      pos_ = i;
      return false;
    }
    if (s_[i] == '\n') {
      pos_ = i + 1;
      return false;
    }
    if (s_[i] == '#') {
      pos_ = i;
      comment();
      if (pos_ < s_.size() && s_[pos_] == '\n') {
        ++pos_;
        emit(TokenKind::Newline, "");
      }
      return false;
    }
    if (col > indents_.back()) {
      indents_.push_back(col);
      emit(TokenKind::Indent, "");
    } else {
      // An inconsistent dedent lands on the enclosing level.
      while (col < indents_.back()) {
        indents_.pop_back();
        emit(TokenKind::Dedent, "");
      }
    }
    pos_ = i;
    line_start_ = false;
    return true;
  }

  void comment() {
    auto nl = s_.find('\n', pos_);
    if (nl == std::string_view::npos) nl = s_.size();
    emit(TokenKind::Comment, rtrim(s_.substr(pos_, nl - pos_)));
    pos_ = nl;
  }

  bool string_start() const {
    std::size_t i = pos_;
    while (i < s_.size() && i - pos_ < 2 &&
           std::isalpha(static_cast<unsigned char>(s_[i]))) {
      ++i;
    }
    for (std::size_t j = pos_; j <= i && j < s_.size(); ++j) {
      if ((s_[j] == '\'' || s_[j] == '"') &&
          (j == pos_ || is_string_prefix(s_.substr(pos_, j - pos_)))) {
        return true;
      }
      if (j < s_.size() && !std::isalpha(static_cast<unsigned char>(s_[j]))) break;
    }
    return false;
  }

  void string_literal() {
    const std::size_t begin = pos_;
    while (s_[pos_] != '\'' && s_[pos_] != '"') ++pos_;
    const char q = s_[pos_];
    const bool triple = s_.substr(pos_, 3) == std::string(3, q);
    pos_ += triple ? 3 : 1;
    bool closed = false;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '\\') {
        pos_ = std::min(s_.size(), pos_ + 2);
        continue;
      }
      if (!triple && c == '\n') break;
      if (c == q) {
        if (!triple) {
          ++pos_;
          closed = true;
          break;
        }
        if (s_.substr(pos_, 3) == std::string(3, q)) {
          pos_ += 3;
          closed = true;
          break;
        }
      }
      ++pos_;
    }
    auto lexeme = s_.substr(begin, pos_ - begin);
    emit(TokenKind::String, closed ? lexeme : rtrim(lexeme));
  }

  void name() {
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && is_ident_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto word = s_.substr(begin, pos_ - begin);
    emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Name, word);
  }

  void digits() {
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
  }

  void number() {
    const std::size_t begin = pos_;
    if (s_[pos_] == '0' && pos_ + 1 < s_.size() &&
        std::string_view("xXoObB").find(s_[pos_ + 1]) != std::string_view::npos) {
      pos_ += 2;
      while (pos_ < s_.size() &&
             (std::isxdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
    } else {
      digits();
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        digits();
      }
      if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
        std::size_t j = pos_ + 1;
        if (j < s_.size() && (s_[j] == '+' || s_[j] == '-')) ++j;
        if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
          pos_ = j;
          digits();
        }
      }
      if (pos_ < s_.size() && (s_[pos_] == 'j' || s_[pos_] == 'J')) ++pos_;
    }
    emit(TokenKind::Number, s_.substr(begin, pos_ - begin));
  }

  void symbol() {
    for (auto sym : kSymbols) {
      if (s_.substr(pos_, sym.size()) == sym) {
        if (sym == "(" || sym == "[" || sym == "{") ++depth_;
        if ((sym == ")" || sym == "]" || sym == "}") && depth_ > 0) --depth_;
        emit(is_punctuation(sym) ? TokenKind::Punctuation : TokenKind::Operator, sym);
        pos_ += sym.size();
        return;
      }
    }
    emit(TokenKind::Punctuation, s_.substr(pos_, 1));
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  bool line_start_ = true;
  std::vector<std::size_t> indents_{0};
  TokenSeq out_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Name: return "name";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "text-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Comment: return "comment";
    case TokenKind::Newline: return "newline";
    case TokenKind::Indent: return "indent";
    case TokenKind::Dedent: return "dedent";
  }
  return "punctuation";
}

TokenSeq tokenize(std::string_view source) { return Lexer(source).run(); }

std::string render_tokens(const TokenSeq& tokens) {
  std::string out;
  std::size_t depth = 0;
  bool line_start = true;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    switch (t.kind) {
      case TokenKind::Indent:
        ++depth;
        continue;
      case TokenKind::Dedent:
        if (depth) --depth;
        continue;
      case TokenKind::Newline:
        // A trailing backslash would otherwise turn into a line continuation.
        if (!line_start && out.back() == '\\') out += ' ';
        out += '\n';
        line_start = true;
        continue;
      default:
        break;
    }
    if (line_start) {
      out.append(depth * 4, ' ');
      line_start = false;
    } else if (!out.empty() && out.back() != '\n') {
      out += ' ';
    }
    out += t.lexeme;
    // Comments and unterminated strings run to the end of the physical line.
    const bool to_eol = t.kind == TokenKind::Comment ||
                        (t.kind == TokenKind::String &&
                         tokenize(t.lexeme + " x").size() == 1);
    if (to_eol && i + 1 < tokens.size() && tokens[i + 1].kind != TokenKind::Newline) {
      out += '\n';
    }
  }
  return out;
}

std::size_t token_edit_distance(std::string_view a, std::string_view b) {
  return levenshtein(tokenize(a), tokenize(b));
}

}  // namespace pyrepair
