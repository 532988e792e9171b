#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lenstight {

enum class ErrorCode {
  NonCoprime,
  UnsupportedP,
  SpinMismatch,
  NoLift,
  InvalidResidue,
  DegenerateP1,
  NotApplicable,
  OutOfRange,
  InvalidWord,
  NotAdmissible,
  NotReducible,
  OvertwistedConfiguration,
  NoValidDiagram,
  Unsupported,
  DeterminantMismatch,
  NonCyclicCokernel,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input-validation failures (as opposed to internal consistency failures).
bool is_input_error(ErrorCode code);

}  // namespace lenstight
