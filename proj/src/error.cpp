#include "cuspk/error.hpp"

namespace cuspk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotPLocal: return "NotPLocal";
    case ErrorKind::SymbolicFactor: return "SymbolicFactor";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::QuotientMode: return "QuotientMode";
  }
  return "Unknown";
}

}  // namespace cuspk
