#pragma once

#include <stdexcept>
#include <string>

namespace rdom {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input, violated precondition, or a size cap exceeded.
class DomainError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedLine,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  CountMismatch,
  LiteralOutOfRange,
  ClauseTooLong,
  EmptyClause,
  TautologicalClause,
  BadToken,
};

class ParseError : public DomainError {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& message)
      : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based physical line number, or 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// A computed result contradicts an identity that must always hold.
/// Signals a bug, never bad input.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rdom
