#include "dpbps/error.hpp"

namespace dpbps {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidClass: return "InvalidClass";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotNef: return "NotNef";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::ConjectureViolation: return "ConjectureViolation";
    case ErrorKind::TruncationOverflow: return "TruncationOverflow";
  }
  return "Unknown";
}

}  // namespace dpbps
