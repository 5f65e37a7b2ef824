#pragma once

#include <stdexcept>
#include <string>

namespace swsim {

enum class ErrorCode {
  SyntaxError,
  UnknownCard,
  DanglingNet,
  RecursiveSubcircuit,
  BadSizing,
  InvalidStimulus,
  UncoveredInput,
  OscillationDetected,
  NoConvergence,
  EmptyWindow,
  NoTransitions,
  ZeroBaseline,
  PulseOverlap,
  NotFlat,
  BadArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

// All recoverable failures surface as Error; the CLI maps them to exit 1
// with the message, never an abort.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int line = -1, int col = -1);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }    // 1-based, -1 if not positional
  int col() const { return col_; }
  // Message without the code/position decoration, for rewrapping.
  const std::string& raw_message() const { return message_; }

 private:
  ErrorCode code_;
  int line_;
  int col_;
  std::string message_;
};

}  // namespace swsim
