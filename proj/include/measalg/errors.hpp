#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace measalg {

enum class ErrorKind {
  DuplicatePoint,
  PartitionGap,
  PartitionOverlap,
  EmptyAtom,
  NegativeWeight,
  ArityMismatch,
  TooManyAtoms,
  UnknownPoint,
  ForeignSet,
  ForeignElement,
  ForeignFunction,
  NotInFinIdeal,
  NotMeasurable,
  NotInverseNilPreserving,
  BudgetExceeded,
  NonPositiveFactor,
  SpaceMismatch,
  InvalidMetric,
  DivisionByZero,
  IndeterminateRatio,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind; the CLI prints the
// kind name verbatim so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace measalg
