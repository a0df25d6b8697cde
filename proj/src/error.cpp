#include "error.hpp"

namespace gkt {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IllFormedHom: return "IllFormedHom";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NonComposableTriple: return "NonComposableTriple";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::NotAPGraph: return "NotAPGraph";
    case ErrorKind::DegreeNotOrderTwo: return "DegreeNotOrderTwo";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::Invalid: return "Invalid";
  }
  return "Unknown";
}

}  // namespace gkt
