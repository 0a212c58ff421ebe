#include "blowchern/error.hpp"

namespace blowchern {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ZeroTruncation: return "ZeroTruncation";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::IllDefinedMap: return "IllDefinedMap";
    case ErrorKind::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NoPairing: return "NoPairing";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::SubgroupViolation: return "SubgroupViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InconsistentEmbedding: return "InconsistentEmbedding";
    case ErrorKind::UnsupportedEmbedding: return "UnsupportedEmbedding";
    case ErrorKind::UnknownModel: return "UnknownModel";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(ErrorKind kind, int line, int column, const std::string& message)
    : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace blowchern
