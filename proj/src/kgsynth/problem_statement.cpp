// Copyright 2026 The kgsynth Authors.
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

#include "kgsynth/problem_statement.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "kgsynth/error.hpp"

namespace kgsynth {
namespace {

using Kind = StatementError::Kind;

enum class Tok { kKey, kEquals, kOpen, kClose, kComma, kString, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source)
      : text_(text), source_(source) {}

  [[noreturn]] void fail(Kind kind, const std::string& message, int line,
                         int column) const {
    throw StatementError(kind, message, line, column, std::string(source_));
  }

  Token next() {
    skip();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    switch (c) {
      case '=': advance(); tok.kind = Tok::kEquals; return tok;
      case '[': advance(); tok.kind = Tok::kOpen; return tok;
      case ']': advance(); tok.kind = Tok::kClose; return tok;
      case ',': advance(); tok.kind = Tok::kComma; return tok;
      case '\'': lex_string(tok); return tok;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        tok.text += text_[pos_], advance();
      tok.kind = Tok::kKey;
      return tok;
    }
    if (c == '"')
      fail(Kind::kSyntax, "strings must be single-quoted", tok.line, tok.column);
    fail(Kind::kSyntax, "unexpected character", tok.line, tok.column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == '\\') {
        // Line continuation: backslash, optional blanks, newline.
        int line = line_, column = column_;
        std::size_t look = pos_ + 1;
        while (look < text_.size() &&
               (text_[look] == ' ' || text_[look] == '\t' || text_[look] == '\r'))
          ++look;
        if (look < text_.size() && text_[look] != '\n')
          fail(Kind::kSyntax, "backslash must end the line", line, column);
        while (pos_ < look) advance();
        if (pos_ < text_.size()) advance();
      } else {
        break;
      }
    }
  }

  void lex_string(Token& tok) {
    advance();
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n')
        fail(Kind::kSyntax, "unterminated string", tok.line, tok.column);
      char c = text_[pos_];
      if (c == '\'') break;
      if (c == '\\') {
        int line = line_, column = column_;
        advance();
        if (pos_ >= text_.size() || (text_[pos_] != '\'' && text_[pos_] != '\\'))
          fail(Kind::kSyntax, "unknown escape in string", line, column);
        tok.text += text_[pos_];
        advance();
        continue;
      }
      tok.text += c;
      advance();
    }
    advance();
    tok.kind = Tok::kString;
  }

  std::string_view text_;
  std::string_view source_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct Value {
  bool is_list = false;
  std::vector<std::string> items;
  Token key;
  Token start;
};

enum class Shape { kScalar, kList };

struct KeySpec {
  std::string_view canonical;
  Shape shape;
  bool required;
};

const std::map<std::string_view, KeySpec>& key_table() {
  static const std::map<std::string_view, KeySpec> table = {
      {"data_sources_names", {"data_source_names", Shape::kList, true}},
      {"data_source_names", {"data_source_names", Shape::kList, true}},
      {"requested_calculations", {"requested_calculations", Shape::kList, true}},
      {"program_requirements", {"program_requirements", Shape::kList, true}},
      {"programming_language", {"programming_language", Shape::kScalar, true}},
      {"program_basename", {"program_basename", Shape::kScalar, true}},
      {"library_preferences", {"library_preferences", Shape::kList, false}},
  };
  return table;
}

std::string quote(std::string_view s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

}  // namespace

ProblemStatement parse_problem_statement(std::string_view text,
                                         std::string_view source) {
  Lexer lexer(text, source);
  std::map<std::string_view, Value> values;
  Token tok = lexer.next();
  while (tok.kind != Tok::kEnd) {
    if (tok.kind != Tok::kKey)
      lexer.fail(Kind::kSyntax, "expected a key", tok.line, tok.column);
    const Token key = tok;
    auto spec = key_table().find(key.text);
    if (spec == key_table().end())
      lexer.fail(Kind::kUnknownKey, "unknown key '" + key.text + "'", key.line,
                 key.column);
    tok = lexer.next();
    if (tok.kind != Tok::kEquals)
      lexer.fail(Kind::kSyntax, "expected '=' after '" + key.text + "'", tok.line,
                 tok.column);

    Value value;
    value.key = key;
    value.start = tok = lexer.next();
    if (tok.kind == Tok::kString) {
      value.items.push_back(tok.text);
    } else if (tok.kind == Tok::kOpen) {
      value.is_list = true;
      while (true) {
        tok = lexer.next();
        if (tok.kind != Tok::kString)
          lexer.fail(Kind::kSyntax, "expected a quoted string in list", tok.line,
                     tok.column);
        value.items.push_back(tok.text);
        tok = lexer.next();
        if (tok.kind == Tok::kClose) break;
        if (tok.kind != Tok::kComma)
          lexer.fail(Kind::kSyntax, "expected ',' or ']'", tok.line, tok.column);
      }
    } else {
      lexer.fail(Kind::kSyntax, "expected a string or a list", tok.line, tok.column);
    }

    const auto canonical = spec->second.canonical;
    if (values.contains(canonical))
      lexer.fail(Kind::kDuplicateKey, "duplicate key '" + key.text + "'",
                 key.line, key.column);
    const bool want_list = spec->second.shape == Shape::kList;
    if (want_list != value.is_list)
      lexer.fail(Kind::kTypeMismatch,
                 "'" + key.text + "' expects " +
                     (want_list ? "a list of strings" : "a single string"),
                 value.start.line, value.start.column);
    values.emplace(canonical, std::move(value));
    tok = lexer.next();
  }

  for (const auto& [name, spec] : key_table()) {
    if (spec.required && !values.contains(spec.canonical))
      lexer.fail(Kind::kMissingKey,
                 "missing key '" + std::string(spec.canonical) + "'", tok.line,
                 tok.column);
  }

  ProblemStatement ps;
  ps.data_source_names = values.at("data_source_names").items;
  ps.requested_calculations = values.at("requested_calculations").items;
  ps.program_requirements = values.at("program_requirements").items;
  ps.programming_language = values.at("programming_language").items.front();
  ps.program_basename = values.at("program_basename").items.front();
  if (auto it = values.find("library_preferences"); it != values.end())
    ps.library_preferences = it->second.items;

  const auto& lang = values.at("programming_language").start;
  if (ps.programming_language.empty())
    lexer.fail(Kind::kInvalidValue, "programming_language is empty", lang.line,
               lang.column);
  const auto& base = values.at("program_basename").start;
  if (ps.program_basename.empty() ||
      ps.program_basename.find_first_of("/\\.") != std::string::npos)
    lexer.fail(Kind::kInvalidValue,
               "program_basename must be non-empty and contain no path "
               "separators or dots",
               base.line, base.column);
  return ps;
}

std::string to_canonical(const ProblemStatement& ps) {
  std::ostringstream out;
  auto list = [&](std::string_view key, const std::vector<std::string>& items) {
    out << key << " = [";
    for (std::size_t i = 0; i < items.size(); ++i)
      out << (i ? ", " : "") << quote(items[i]);
    out << "]\n";
  };
  list("data_source_names", ps.data_source_names);
  list("requested_calculations", ps.requested_calculations);
  list("program_requirements", ps.program_requirements);
  out << "programming_language = " << quote(ps.programming_language) << "\n";
  out << "program_basename = " << quote(ps.program_basename) << "\n";
  if (!ps.library_preferences.empty())
    list("library_preferences", ps.library_preferences);
  return out.str();
}

}  // namespace kgsynth
