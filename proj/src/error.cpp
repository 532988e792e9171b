#include "lenstight/error.hpp"

namespace lenstight {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonCoprime: return "NON_COPRIME";
    case ErrorCode::UnsupportedP: return "UNSUPPORTED_P";
    case ErrorCode::SpinMismatch: return "SPIN_MISMATCH";
    case ErrorCode::NoLift: return "NO_LIFT";
    case ErrorCode::InvalidResidue: return "INVALID_RESIDUE";
    case ErrorCode::DegenerateP1: return "DEGENERATE_P1";
    case ErrorCode::NotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::InvalidWord: return "INVALID_WORD";
    case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
    case ErrorCode::NotReducible: return "NOT_REDUCIBLE";
    case ErrorCode::OvertwistedConfiguration: return "OVERTWISTED_CONFIGURATION";
    case ErrorCode::NoValidDiagram: return "NO_VALID_DIAGRAM";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
    case ErrorCode::DeterminantMismatch: return "DETERMINANT_MISMATCH";
    case ErrorCode::NonCyclicCokernel: return "NON_CYCLIC_COKERNEL";
    case ErrorCode::Overflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonCoprime:
    case ErrorCode::UnsupportedP:
    case ErrorCode::SpinMismatch:
    case ErrorCode::NoLift:
    case ErrorCode::InvalidResidue:
    case ErrorCode::OutOfRange:
    case ErrorCode::InvalidWord:
    case ErrorCode::NotAdmissible:
    case ErrorCode::Unsupported:
    case ErrorCode::NotApplicable:
    case ErrorCode::DegenerateP1:
    case ErrorCode::NotReducible:
    case ErrorCode::OvertwistedConfiguration:
      return true;
    default:
      return false;
  }
}

}  // namespace lenstight
