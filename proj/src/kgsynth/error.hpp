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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kgsynth {

// Rejected by the store: literal subject, non-IRI predicate, bad IRI.
class MalformedQuad : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Positioned diagnostic from any of the text formats (ontology files,
// problem statements, query patterns). Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column, std::string source = {})
      : std::runtime_error(format(message, line, column, source)),
        message_(std::move(message)),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  // File name or other origin; empty for in-memory text.
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column,
                            const std::string& source) {
    std::string out = source.empty() ? std::string() : source + ":";
    return out + std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::string message_;
  std::string source_;
  int line_;
  int column_;
};

// Ontology set could not be assembled (missing file, unknown import,
// inconsistent catalog, failed completeness check).
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StatementError : public ParseError {
 public:
  enum class Kind {
    kSyntax,
    kMissingKey,
    kUnknownKey,
    kDuplicateKey,
    kTypeMismatch,
    kInvalidValue,
  };

  StatementError(Kind kind, std::string message, int line, int column,
                 std::string source = {})
      : ParseError(std::move(message), line, column, std::move(source)),
        kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ResolveError : public std::runtime_error {
 public:
  enum class Kind {
    kNoDataSource,
    kNoAlgorithm,
    kIncompatible,
    kNoStructure,
    kNoLanguage,
    kNoFunction,
    kAmbiguous,
    kUnsupported,
  };

  ResolveError(Kind kind, std::string message,
               std::vector<std::string> details = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        details_(std::move(details)) {}

  Kind kind() const { return kind_; }
  // Surviving candidates for kAmbiguous, violated constraints for
  // kIncompatible.
  const std::vector<std::string>& details() const { return details_; }

 private:
  Kind kind_;
  std::vector<std::string> details_;
};

class ComposeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RenderError : public std::runtime_error {
 public:
  enum class Kind { kUnsupportedLanguage, kUnmappableStatement };

  RenderError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kgsynth
