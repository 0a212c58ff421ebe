#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowchern {

enum class ErrorKind {
  InvalidArgument,
  NonHomogeneousRelation,
  UnknownGenerator,
  ZeroTruncation,
  RingMismatch,
  IllDefinedMap,
  NonUnitLeadingTerm,
  RankMismatch,
  DegreeMismatch,
  NoPairing,
  BadPartition,
  SubgroupViolation,
  DimensionMismatch,
  InconsistentEmbedding,
  UnsupportedEmbedding,
  UnknownModel,
  SyntaxError,
  SemanticError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A diagnostic tied to a 1-based line/column in a model source.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The message without the "line:col: kind:" prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace blowchern
