#include "bsts/error.hpp"

namespace bsts {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::BadLineSize: return "BadLineSize";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::NonUniformRank: return "NonUniformRank";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::LabelsNotPairs: return "LabelsNotPairs";
    case ErrorKind::NotFullPairSet: return "NotFullPairSet";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::OverlapError: return "OverlapError";
    case ErrorKind::MuNotBijective: return "MuNotBijective";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NotProjective: return "NotProjective";
    case ErrorKind::NotAHyperplane: return "NotAHyperplane";
    case ErrorKind::NotBinomial: return "NotBinomial";
    case ErrorKind::NotBinomialPlusOne: return "NotBinomialPlusOne";
    case ErrorKind::NoDecomposition: return "NoDecomposition";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> indices)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      indices_(std::move(indices)) {}

}  // namespace bsts
