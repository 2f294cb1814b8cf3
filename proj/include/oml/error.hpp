// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oml {

/// Error classes shared by every module. The C API maps each kind onto one
/// status code, and the CLI maps status codes onto exit codes.
enum class ErrorKind {
  InvalidArgument,
  OutOfRange,        // element handle not in the lattice
  Parse,             // syntax error in a text document
  DanglingReference, // label/cover/ortho naming an element that does not exist
  NotALattice,       // meet or join not unique
  Validation,        // a named law failed
  Diagram,           // malformed Greechie diagram
  PastingInvalid,    // pasted structure fails a lattice law
  Size,              // size cap exceeded
  MissingElement,    // state does not assign every element
  Normalization,
  NoState,
  DimensionMismatch,
  InvalidMatrix,     // projection/density/basis invariant violated
  IllConditioned,
  ClosureOverflow,
  Precondition,
  Domain,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace oml
