#include "measalg/errors.hpp"

namespace measalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::PartitionGap: return "PartitionGap";
    case ErrorKind::PartitionOverlap: return "PartitionOverlap";
    case ErrorKind::EmptyAtom: return "EmptyAtom";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::TooManyAtoms: return "TooManyAtoms";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::ForeignSet: return "ForeignSet";
    case ErrorKind::ForeignElement: return "ForeignElement";
    case ErrorKind::ForeignFunction: return "ForeignFunction";
    case ErrorKind::NotInFinIdeal: return "NotInFinIdeal";
    case ErrorKind::NotMeasurable: return "NotMeasurable";
    case ErrorKind::NotInverseNilPreserving: return "NotInverseNilPreserving";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonPositiveFactor: return "NonPositiveFactor";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::InvalidMetric: return "InvalidMetric";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::IndeterminateRatio: return "IndeterminateRatio";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail) {}

}  // namespace measalg
