#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsts {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateLabel,
  BadLineSize,
  DuplicatePair,
  NonUniformRank,
  WidthMismatch,
  LabelsNotPairs,
  NotFullPairSet,
  BadSize,
  OverlapError,
  MuNotBijective,
  SizeMismatch,
  InvariantViolation,
  ValidationFailed,
  SearchBudgetExceeded,
  NotProjective,
  NotAHyperplane,
  NotBinomial,
  NotBinomialPlusOne,
  NoDecomposition,
  FixtureMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library. `indices()` names the offending
// points (or lines, or positions) when the failure is local.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<int> indices_;
};

}  // namespace bsts
